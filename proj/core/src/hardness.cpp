#include "tfed/hardness.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

#include "tfed/arcs.hpp"
#include "tfed/errors.hpp"

namespace tfed {

long long BinPackingInstance::total() const {
  return std::accumulate(sizes.begin(), sizes.end(), 0LL);
}

namespace {

void check_binpack(const BinPackingInstance& bp) {
  if (bp.sizes.empty()) throw MalformedInput("bin packing needs at least one item");
  if (bp.bins < 1 || bp.capacity < 1) throw MalformedInput("bins and capacity must be positive");
  for (int a : bp.sizes) {
    if (a < 1) throw MalformedInput("item sizes must be positive");
  }
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

std::string family_text(const std::vector<VertexSet>& family) {
  std::string out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += ";";
    out += join(family[i]);
  }
  return out;
}

Metadata graph_metadata(Metadata meta, long long n, long long m, long long k, long long h,
                        bool expected) {
  meta.emplace_back("n", std::to_string(n));
  meta.emplace_back("m", std::to_string(m));
  meta.emplace_back("k", std::to_string(k));
  meta.emplace_back("h", std::to_string(h));
  meta.emplace_back("expected", expected ? "yes" : "no");
  return meta;
}

}  // namespace

bool binpack_decide(const BinPackingInstance& bp) {
  check_binpack(bp);
  if (bp.sizes.size() > 12) throw CapExceeded("bin packing oracle limited to 12 items");
  std::vector<int> items = bp.sizes;
  std::sort(items.rbegin(), items.rend());
  if (items.front() > bp.capacity) return false;
  if (bp.total() > static_cast<long long>(bp.bins) * bp.capacity) return false;
  std::vector<long long> load(bp.bins, 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == items.size()) return true;
    for (int b = 0; b < bp.bins; ++b) {
      bool repeat = false;
      for (int e = 0; e < b; ++e) repeat = repeat || load[e] == load[b];
      if (repeat || load[b] + items[i] > bp.capacity) continue;
      load[b] += items[i];
      const bool ok = place(i + 1);
      load[b] -= items[i];
      if (ok) return true;
    }
    return false;
  };
  return place(0);
}

bool hitting_decide(const HittingSetInstance& hs) {
  if (hs.universe < 0 || hs.k < 0) throw MalformedInput("negative hitting set parameter");
  if (hs.universe > 16) throw CapExceeded("hitting set oracle limited to 16 elements");
  std::vector<unsigned> masks;
  for (const auto& set : hs.family) {
    if (set.empty()) throw MalformedInput("family members must be nonempty");
    unsigned mask = 0;
    for (int x : set) {
      if (x < 0 || x >= hs.universe) throw MalformedInput("family member outside the universe");
      mask |= 1u << x;
    }
    masks.push_back(mask);
  }
  const unsigned limit = 1u << hs.universe;
  for (unsigned choice = 0; choice < limit; ++choice) {
    if (std::popcount(choice) > hs.k) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](unsigned m) { return (m & choice) != 0; })) {
      return true;
    }
  }
  return false;
}

std::string to_string(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::clique:
      return "clique";
    case GadgetFamily::path:
      return "path";
    case GadgetFamily::star:
      return "star";
  }
  return "clique";
}

GadgetFamily parse_gadget_family(const std::string& text) {
  if (text == "clique") return GadgetFamily::clique;
  if (text == "path") return GadgetFamily::path;
  if (text == "star") return GadgetFamily::star;
  throw MalformedInput("unknown gadget family '" + text + "'");
}

namespace {

/// Adds a connected gadget on vertices first..first+size-1 and returns the
/// bags of a path decomposition of it.
std::vector<VertexSet> add_gadget(EdgeSet& edges, GadgetFamily family, int first, int size) {
  std::vector<VertexSet> bags;
  if (size == 1) return {{first}};
  switch (family) {
    case GadgetFamily::clique: {
      VertexSet all;
      for (int i = 0; i < size; ++i) {
        all.push_back(first + i);
        for (int j = i + 1; j < size; ++j) edges.emplace_back(first + i, first + j);
      }
      bags.push_back(all);
      break;
    }
    case GadgetFamily::path:
      for (int i = 0; i + 1 < size; ++i) {
        edges.emplace_back(first + i, first + i + 1);
        bags.push_back({first + i, first + i + 1});
      }
      break;
    case GadgetFamily::star:
      for (int i = 1; i < size; ++i) {
        edges.emplace_back(first, first + i);
        bags.push_back({first, first + i});
      }
      break;
  }
  return bags;
}

}  // namespace

GeneratedInstance gen_binpack(const BinPackingInstance& bp, GadgetFamily family) {
  check_binpack(bp);
  const int t = bp.bins;
  const long long a = bp.total();
  const long long k = a * (t - 1);
  const long long h = 10LL * bp.capacity + k;
  const long long h_prime = h - bp.capacity - 1;
  const long long n = t + a + t * h_prime;
  if (n > 5'000'000) throw InstanceTooLarge("bin packing construction has " + std::to_string(n) + " vertices");

  GeneratedInstance out;
  EdgeSet edges;
  for (int j = 0; j < t; ++j) out.X.push_back(j);
  std::vector<std::vector<VertexSet>> gadget_bags;
  int next = t;
  for (int size : bp.sizes) {
    gadget_bags.push_back(add_gadget(edges, family, next, size));
    for (int v = next; v < next + size; ++v) {
      for (int x = 0; x < t; ++x) edges.emplace_back(x, v);
    }
    next += size;
  }
  for (int j = 0; j < t; ++j) {
    const int size = static_cast<int>(h_prime);
    gadget_bags.push_back(add_gadget(edges, family, next, size));
    for (int v = next; v < next + size; ++v) edges.emplace_back(j, v);
    next += size;
  }
  for (const auto& bags : gadget_bags) {
    for (const auto& bag : bags) {
      VertexSet full = out.X;
      full.insert(full.end(), bag.begin(), bag.end());
      out.decomposition.bags.push_back(make_vertex_set(std::move(full)));
    }
  }
  out.instance = Instance{Graph(static_cast<int>(n), edges), k, static_cast<int>(h)};
  out.expected_yes = binpack_decide(bp);
  Metadata meta{{"generator", "binpack"},
                {"family", to_string(family)},
                {"sizes", join(bp.sizes)},
                {"bins", std::to_string(t)},
                {"capacity", std::to_string(bp.capacity)},
                {"h_prime", std::to_string(h_prime)}};
  out.metadata = graph_metadata(std::move(meta), n, out.instance.graph.edge_count(), k, h,
                                out.expected_yes);
  return out;
}

SplitParameters split_parameters(const BinPackingInstance& bp,
                                 std::optional<long long> alpha_override) {
  check_binpack(bp);
  using Big = SplitParameters::Big;
  const Big n = static_cast<long long>(bp.sizes.size());
  const Big t = bp.bins;
  const Big a = bp.total();
  const Big C = bp.capacity;
  SplitParameters p;
  if (alpha_override) {
    if (Big(*alpha_override) < 2 * n * n) {
      throw AlphaTooSmall("alpha must be at least 2N^2 = " + Big(2 * n * n).str());
    }
    p.alpha = *alpha_override;
  } else {
    p.alpha = boost::multiprecision::pow(n, 100);
  }
  p.k = p.alpha * (t - 1) * a + 2 * n * (n - 1) + 2 * n * (t - 1) + t * (t - 1) / 2;
  p.h = 4 * (p.alpha * C + n + p.k);
  p.h_prime = p.h - (p.alpha * C + 2 * n + 1);
  p.vertex_count = t + t * p.h_prime + p.alpha * a + 2 * n;
  return p;
}

GeneratedInstance gen_split(const BinPackingInstance& bp, std::optional<long long> alpha_override,
                            long long max_vertices) {
  const SplitParameters p = split_parameters(bp, alpha_override);
  if (p.vertex_count > max_vertices) {
    throw InstanceTooLarge("split construction has " + p.vertex_count.str() + " vertices");
  }
  const int t = bp.bins;
  const int N = static_cast<int>(bp.sizes.size());
  const long long alpha = p.alpha.convert_to<long long>();
  const int h_prime = p.h_prime.convert_to<int>();
  const int n = p.vertex_count.convert_to<int>();

  GeneratedInstance out;
  EdgeSet edges;
  VertexSet clique_side;
  for (int j = 0; j < t; ++j) clique_side.push_back(j);
  int next = t;
  for (int j = 0; j < t; ++j) {
    for (int i = 0; i < h_prime; ++i) edges.emplace_back(j, next + i);
    next += h_prime;
  }
  for (int i = 0; i < N; ++i) {
    const int a_size = static_cast<int>(alpha * bp.sizes[i]);
    const int b0 = next + a_size;
    for (int v = next; v < next + a_size; ++v) {
      edges.emplace_back(v, b0);
      edges.emplace_back(v, b0 + 1);
      for (int j = 0; j < t; ++j) edges.emplace_back(j, v);
    }
    clique_side.push_back(b0);
    clique_side.push_back(b0 + 1);
    next = b0 + 2;
  }
  for (std::size_t i = 0; i < clique_side.size(); ++i) {
    for (std::size_t j = i + 1; j < clique_side.size(); ++j) {
      edges.emplace_back(clique_side[i], clique_side[j]);
    }
  }
  out.X = make_vertex_set(std::move(clique_side));
  out.instance = Instance{Graph(n, edges), p.k.convert_to<long long>(), p.h.convert_to<int>()};
  out.expected_yes = binpack_decide(bp);
  Metadata meta{{"generator", "split"},
                {"sizes", join(bp.sizes)},
                {"bins", std::to_string(t)},
                {"capacity", std::to_string(bp.capacity)},
                {"alpha", p.alpha.str()},
                {"h_prime", p.h_prime.str()}};
  out.metadata = graph_metadata(std::move(meta), n, out.instance.graph.edge_count(),
                                out.instance.k, out.instance.h, out.expected_yes);
  return out;
}

GeneratedDiInstance gen_hitting_dag(const HittingSetInstance& hs, int c) {
  const int n = hs.universe;
  if (n < 2) throw ParameterTooSmall("the construction needs a universe of at least 2 elements");
  if (c < 2) throw ParameterTooSmall("the construction needs c >= 2");
  long long h = 1;
  for (int i = 0; i < c; ++i) {
    h *= n;
    if (h > 1'000'000) throw InstanceTooLarge("h = n^c exceeds 10^6");
  }
  const long long per_element = h / n;
  const bool expected = hitting_decide(hs);
  for (const auto& set : hs.family) {
    const long long sinks = h + 1 - per_element * static_cast<long long>(set.size());
    if (sinks < 0) throw ParameterTooSmall("c too small: a set would get a negative sink count");
    if (per_element < 2 * static_cast<long long>(set.size()) + 1) {
      throw ParameterTooSmall("c too small: h/n must be at least 2|F| + 1");
    }
  }

  std::vector<Arc> arcs;
  std::vector<int> v_x(n);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    v_x[x] = next;
    arcs.push_back({next, next + 1});
    for (long long i = 0; i < per_element; ++i) arcs.push_back({next + 1, static_cast<int>(next + 2 + i)});
    next += static_cast<int>(2 + per_element);
  }
  for (const auto& set : hs.family) {
    const int v_f = next;
    for (int x : set) arcs.push_back({v_f, v_x[x]});
    const long long sinks = h + 1 - per_element * static_cast<long long>(set.size());
    for (long long i = 0; i < sinks; ++i) arcs.push_back({v_f, static_cast<int>(v_f + 1 + i)});
    next += static_cast<int>(1 + sinks);
  }

  GeneratedDiInstance out;
  out.instance = DiInstance{DiGraph(next, arcs), hs.k, static_cast<int>(h)};
  out.expected_yes = expected;
  try {
    const ArcResult solved = solve_arcs(out.instance);
    if (solved.yes != expected) {
      throw ParameterTooSmall("c = " + std::to_string(c) +
                              " gives an arc instance whose answer differs from the hitting set");
    }
    out.validated = true;
  } catch (const CapExceeded&) {
    out.validated = false;
  }
  Metadata meta{{"generator", "hitting-dag"},
                {"universe", std::to_string(n)},
                {"family", family_text(hs.family)},
                {"c", std::to_string(c)},
                {"validated", out.validated ? "yes" : "no"}};
  out.metadata = graph_metadata(std::move(meta), next, out.instance.digraph.arc_count(), hs.k, h,
                                expected);
  return out;
}

std::optional<int> smallest_valid_c(const HittingSetInstance& hs, int max_c) {
  for (int c = 2; c <= max_c; ++c) {
    try {
      gen_hitting_dag(hs, c);
      return c;
    } catch (const ParameterTooSmall&) {
    } catch (const InstanceTooLarge&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace tfed
