#include "tfed/ip_model.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tfed/errors.hpp"

namespace tfed {

int IntegerProgramModel::add_variable(std::string name, long long lower, long long upper) {
  variables.push_back({std::move(name), lower, upper});
  return static_cast<int>(variables.size()) - 1;
}

void IntegerProgramModel::add_constraint(std::string name, std::vector<LinearTerm> terms,
                                         Relation relation, long long rhs) {
  constraints.push_back({std::move(name), std::move(terms), relation, rhs});
}

int IntegerProgramModel::find_variable(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

void IntegerProgramModel::validate() const {
  const int n = static_cast<int>(variables.size());
  std::set<std::string> names;
  for (const auto& v : variables) {
    if (v.lower > v.upper) throw MalformedInput("variable " + v.name + " has empty domain");
    if (!names.insert(v.name).second) throw MalformedInput("duplicate variable " + v.name);
  }
  auto check = [&](int var) {
    if (var < 0 || var >= n) throw MalformedInput("term references an undeclared variable");
  };
  for (const auto& c : constraints) {
    if (c.terms.empty()) throw MalformedInput("constraint " + c.name + " has no terms");
    for (const auto& t : c.terms) check(t.var);
  }
  for (const auto& t : objective_linear) check(t.var);
  for (const auto& q : objective_quadratic) {
    check(q.a);
    check(q.b);
  }
}

long long IntegerProgramModel::evaluate(std::span<const long long> values) const {
  long long total = objective_constant;
  for (const auto& t : objective_linear) total += t.coef * values[t.var];
  for (const auto& q : objective_quadratic) total += q.coef * values[q.a] * values[q.b];
  return total;
}

bool IntegerProgramModel::satisfies(std::span<const long long> values) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (values[i] < variables[i].lower || values[i] > variables[i].upper) return false;
  }
  for (const auto& c : constraints) {
    long long lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * values[t.var];
    switch (c.relation) {
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

void write_term(std::ostream& out, long long coef, const std::string& name) {
  out << (coef < 0 ? " - " : " + ") << (coef < 0 ? -coef : coef) << ' ' << name;
}

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::equal:
      return "=";
    case Relation::less_equal:
      return "<=";
    case Relation::greater_equal:
      return ">=";
  }
  return "=";
}

}  // namespace

std::string emit_model_file(const IntegerProgramModel& model) {
  model.validate();
  std::ostringstream out;
  const auto& vars = model.variables;
  out << "Minimize\n obj:";
  bool any = false;
  for (const auto& t : model.objective_linear) {
    write_term(out, t.coef, vars[t.var].name);
    any = true;
  }
  if (!model.objective_quadratic.empty()) {
    out << " + [";
    for (const auto& q : model.objective_quadratic) {
      const long long c = 2 * q.coef;
      out << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c) << ' ' << vars[q.a].name;
      if (q.a == q.b) {
        out << " ^ 2";
      } else {
        out << " * " << vars[q.b].name;
      }
    }
    out << " ] / 2";
    any = true;
  }
  if (model.objective_constant != 0 || !any) {
    const long long c = model.objective_constant;
    out << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c);
  }
  out << "\nSubject To\n";
  for (const auto& c : model.constraints) {
    out << ' ' << c.name << ':';
    for (const auto& t : c.terms) write_term(out, t.coef, vars[t.var].name);
    out << ' ' << relation_text(c.relation) << ' ' << c.rhs << '\n';
  }
  out << "Bounds\n";
  for (const auto& v : vars) out << ' ' << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
  out << "Generals\n";
  for (const auto& v : vars) out << ' ' << v.name << '\n';
  out << "End\n";
  return out.str();
}

namespace {

class ModelReader {
 public:
  explicit ModelReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) lines_.push_back({line_no, std::move(tokens)});
    }
  }

  IntegerProgramModel read() {
    expect_keyword({"Minimize"});
    // Variables are declared in the Bounds section; rows refer to them by
    // name, so objective and rows are resolved after Bounds is read.
    const auto objective = next_line("objective");
    std::vector<Line> rows;
    expect_keyword({"Subject", "To"});
    while (!at_keyword("Bounds")) rows.push_back(next_line("constraint"));
    expect_keyword({"Bounds"});
    while (!at_keyword("Generals")) read_bound(next_line("bound"));
    expect_keyword({"Generals"});
    while (!at_keyword("End")) {
      const Line l = next_line("general");
      for (const auto& name : l.tokens) {
        if (!index_.count(name)) throw ParseError(l.number, "unknown variable '" + name + "'");
      }
    }
    expect_keyword({"End"});
    if (pos_ != lines_.size()) throw ParseError(lines_[pos_].number, "text after End");
    read_objective(objective);
    for (const auto& row : rows) read_row(row);
    return std::move(model_);
  }

 private:
  struct Line {
    int number = 0;
    std::vector<std::string> tokens;
  };

  bool at_keyword(const std::string& word) const {
    if (pos_ >= lines_.size()) throw ParseError(last_line(), "missing section '" + word + "'");
    return lines_[pos_].tokens.front() == word;
  }

  int last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  void expect_keyword(const std::vector<std::string>& words) {
    if (pos_ >= lines_.size() || lines_[pos_].tokens != words) {
      std::string joined;
      for (const auto& w : words) joined += (joined.empty() ? "" : " ") + w;
      throw ParseError(pos_ < lines_.size() ? lines_[pos_].number : last_line(),
                       "expected '" + joined + "'");
    }
    ++pos_;
  }

  Line next_line(const char* what) {
    if (pos_ >= lines_.size()) throw ParseError(last_line(), std::string("missing ") + what);
    return lines_[pos_++];
  }

  static long long number(const Line& l, const std::string& tok) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used == tok.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ParseError(l.number, "expected integer, got '" + tok + "'");
  }

  static bool is_number(const std::string& tok) {
    return !tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0])) ||
                            (tok.size() > 1 && tok[0] == '-' &&
                             std::isdigit(static_cast<unsigned char>(tok[1]))));
  }

  int var(const Line& l, const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw ParseError(l.number, "unknown variable '" + name + "'");
    return it->second;
  }

  void read_bound(const Line& l) {
    const auto& t = l.tokens;
    if (t.size() != 5 || t[1] != "<=" || t[3] != "<=") {
      throw ParseError(l.number, "expected 'low <= name <= high'");
    }
    if (index_.count(t[2])) throw ParseError(l.number, "duplicate variable '" + t[2] + "'");
    index_[t[2]] = model_.add_variable(t[2], number(l, t[0]), number(l, t[4]));
  }

  /// Reads "(+|-) coef name" terms from tokens[i..end).
  std::vector<LinearTerm> read_terms(const Line& l, std::size_t& i, std::size_t end,
                                     long long* constant) const {
    std::vector<LinearTerm> terms;
    const auto& t = l.tokens;
    while (i < end) {
      if (t[i] == "+" && i + 1 < end && t[i + 1] == "[") return terms;
      if (t[i] != "+" && t[i] != "-") throw ParseError(l.number, "expected sign before term");
      const long long sign = t[i] == "-" ? -1 : 1;
      if (i + 1 >= end) throw ParseError(l.number, "dangling sign");
      const long long coef = sign * number(l, t[i + 1]);
      if (i + 2 < end && t[i + 2] != "+" && t[i + 2] != "-" && !is_number(t[i + 2])) {
        terms.push_back({var(l, t[i + 2]), coef});
        i += 3;
      } else {
        if (!constant) throw ParseError(l.number, "constant term in a constraint row");
        *constant += coef;
        i += 2;
      }
    }
    return terms;
  }

  void read_objective(const Line& l) {
    const auto& t = l.tokens;
    if (t.empty() || t[0] != "obj:") throw ParseError(l.number, "expected 'obj:'");
    std::size_t i = 1;
    model_.objective_linear = read_terms(l, i, t.size(), &model_.objective_constant);
    if (i < t.size()) {
      i += 2;  // "+ ["
      while (i < t.size() && t[i] != "]") {
        if (t[i] != "+" && t[i] != "-") throw ParseError(l.number, "expected sign in [ ]");
        if (i + 3 >= t.size()) throw ParseError(l.number, "truncated quadratic term");
        const long long c = (t[i] == "-" ? -1 : 1) * number(l, t[i + 1]);
        if (c % 2 != 0) throw ParseError(l.number, "odd coefficient inside [ ] / 2");
        const int a = var(l, t[i + 2]);
        if (t[i + 3] == "^") {
          if (i + 4 >= t.size() || t[i + 4] != "2") throw ParseError(l.number, "expected '^ 2'");
          model_.objective_quadratic.push_back({a, a, c / 2});
          i += 5;
        } else if (t[i + 3] == "*") {
          if (i + 4 >= t.size()) throw ParseError(l.number, "truncated product");
          model_.objective_quadratic.push_back({a, var(l, t[i + 4]), c / 2});
          i += 5;
        } else {
          throw ParseError(l.number, "expected '*' or '^'");
        }
      }
      if (i + 2 >= t.size() || t[i] != "]" || t[i + 1] != "/" || t[i + 2] != "2") {
        throw ParseError(l.number, "expected '] / 2'");
      }
      i += 3;
      read_terms(l, i, t.size(), &model_.objective_constant);
    }
  }

  void read_row(const Line& l) {
    const auto& t = l.tokens;
    if (t.size() < 3 || t[0].size() < 2 || t[0].back() != ':') {
      throw ParseError(l.number, "expected 'name: terms relation rhs'");
    }
    const std::string rel = t[t.size() - 2];
    Relation relation;
    if (rel == "=") {
      relation = Relation::equal;
    } else if (rel == "<=") {
      relation = Relation::less_equal;
    } else if (rel == ">=") {
      relation = Relation::greater_equal;
    } else {
      throw ParseError(l.number, "unknown relation '" + rel + "'");
    }
    std::size_t i = 1;
    auto terms = read_terms(l, i, t.size() - 2, nullptr);
    if (i != t.size() - 2) throw ParseError(l.number, "unexpected token in row");
    model_.add_constraint(t[0].substr(0, t[0].size() - 1), std::move(terms), relation,
                          number(l, t.back()));
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, int> index_;
  IntegerProgramModel model_;
};

}  // namespace

IntegerProgramModel parse_model_file(const std::string& text) { return ModelReader(text).read(); }

}  // namespace tfed
