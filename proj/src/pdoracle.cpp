#include "hopfknots/pdoracle.hpp"

#include "hopfknots/knot_id.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace hopfknots {

void PlanarDiagram::validate() const {
  std::map<int, int> uses;
  for (const auto& x : crossings)
    for (int e : x.e) ++uses[e];
  for (const auto& [edge, count] : uses)
    if (count != 2)
      throw ConstraintError("PD edge " + std::to_string(edge) + " occurs " +
                            std::to_string(count) + " times (expected 2)");
}

PlanarDiagram braid_closure_pd(const BraidWord& w) {
  if (w.strands < 2) throw ConstraintError("braid needs at least 2 strands");
  for (int letter : w.letters)
    if (letter == 0 || std::abs(letter) >= w.strands)
      throw ConstraintError("braid letter " + std::to_string(letter) +
                            " out of range for " + std::to_string(w.strands) +
                            " strands");

  // Strands run downward; cur[p] is the edge currently open at position p.
  std::vector<int> top(w.strands), cur(w.strands);
  int next_edge = 1;
  for (int p = 0; p < w.strands; ++p) top[p] = cur[p] = next_edge++;

  PlanarDiagram pd;
  for (int letter : w.letters) {
    const int p = std::abs(letter) - 1;
    const int tl = cur[p], tr = cur[p + 1];
    const int bl = next_edge++, br = next_edge++;
    if (letter > 0) {
      // Positive crossing: right strand over. Under-in at top-left; tuple
      // counterclockwise is (TL, BL, BR, TR).
      pd.crossings.push_back({{tl, bl, br, tr}});
    } else {
      // Negative crossing: left strand over; under-in at top-right.
      pd.crossings.push_back({{tr, tl, bl, br}});
    }
    cur[p] = bl;
    cur[p + 1] = br;
  }

  // Close the braid: identify the open bottom edges with the top ones.
  std::map<int, int> rename;
  for (int p = 0; p < w.strands; ++p)
    if (cur[p] != top[p]) rename[cur[p]] = top[p];
  for (auto& x : pd.crossings)
    for (int& e : x.e) {
      auto it = rename.find(e);
      if (it != rename.end()) e = it->second;
    }
  pd.validate();
  return pd;
}

PlanarDiagram torus_braid_pd(long long m, long long n) {
  if (m < 2) throw ConstraintError("torus_braid_pd: m must be at least 2");
  if (n < 1) throw ConstraintError("torus_braid_pd: n must be positive");
  if (std::gcd(m, n) != 1) throw ConstraintError("torus_braid_pd: gcd(m,n) must be 1");
  BraidWord w;
  w.strands = static_cast<int>(m);
  for (long long rep = 0; rep < n; ++rep)
    for (long long i = 1; i < m; ++i) w.letters.push_back(static_cast<int>(i));
  return braid_closure_pd(w);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Dense re-labeling of edge ids for union-find indexing.
struct EdgeIndex {
  std::map<int, int> index;
  explicit EdgeIndex(const PlanarDiagram& pd) {
    for (const auto& x : pd.crossings)
      for (int e : x.e) index.emplace(e, 0);
    int next = 0;
    for (auto& [edge, id] : index) id = next++;
  }
  std::size_t size() const { return index.size(); }
  int operator()(int edge) const { return index.at(edge); }
};

}  // namespace

LaurentPoly kauffman_bracket_pd(const PlanarDiagram& pd) {
  pd.validate();
  const std::size_t k = pd.crossing_count();
  if (k > 20)
    throw StateBudgetExceeded("state sum over " + std::to_string(k) +
                              " crossings exceeds the 2^20 budget");
  if (k == 0) return LaurentPoly::one(Var::A);

  const EdgeIndex idx(pd);

  // delta = -A^2 - A^-2; powers up to the largest possible loop count.
  LaurentPoly delta(Var::A);
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::one(Var::A)};
  for (std::size_t i = 1; i <= k + 1; ++i) delta_pow.push_back(delta_pow.back() * delta);

  LaurentPoly bracket(Var::A);
  for (std::uint64_t state = 0; state < (1ull << k); ++state) {
    UnionFind uf(idx.size());
    int a_count = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const auto& e = pd.crossings[c].e;
      if (state & (1ull << c)) {
        // B-smoothing joins (slot0, slot3) and (slot1, slot2).
        uf.unite(idx(e[0]), idx(e[3]));
        uf.unite(idx(e[1]), idx(e[2]));
      } else {
        // A-smoothing joins (slot0, slot1) and (slot2, slot3).
        ++a_count;
        uf.unite(idx(e[0]), idx(e[1]));
        uf.unite(idx(e[2]), idx(e[3]));
      }
    }
    int loops = 0;
    for (std::size_t i = 0; i < idx.size(); ++i)
      if (uf.find(static_cast<int>(i)) == static_cast<int>(i)) ++loops;
    const int b_count = static_cast<int>(k) - a_count;
    bracket += delta_pow[loops - 1].shifted(a_count - b_count);
  }
  return bracket;
}

namespace {

// Walks the diagram strand by strand. Returns, per crossing, the direction
// of travel through each slot (+1 in, -1 out), or nullopt if the diagram is
// not a single closed component.
struct Traversal {
  // visited[c][slot] = +1 if the strand enters the crossing at this slot,
  // -1 if it leaves there, 0 if unvisited.
  std::vector<std::array<int, 4>> slot_dir;
  bool single_component = false;
};

Traversal traverse(const PlanarDiagram& pd) {
  const std::size_t k = pd.crossing_count();
  Traversal tr;
  tr.slot_dir.assign(k, {0, 0, 0, 0});
  if (k == 0) {
    tr.single_component = true;
    return tr;
  }

  // Endpoint list per edge: (crossing, slot) pairs.
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (std::size_t c = 0; c < k; ++c)
    for (int s = 0; s < 4; ++s)
      ends[pd.crossings[c].e[s]].push_back({static_cast<int>(c), s});

  // Start on edge at crossing 0, slot 0 (incoming under): we arrive there.
  int cur_crossing = 0, cur_slot = 0;
  std::size_t steps = 0;
  do {
    if (tr.slot_dir[cur_crossing][cur_slot] != 0) return tr;  // revisit: not a knot
    tr.slot_dir[cur_crossing][cur_slot] = +1;                 // entering here
    const int out_slot = (cur_slot + 2) % 4;                  // strand passes through
    if (tr.slot_dir[cur_crossing][out_slot] != 0) return tr;
    tr.slot_dir[cur_crossing][out_slot] = -1;                 // leaving here
    const int edge = pd.crossings[cur_crossing].e[out_slot];
    // Follow the edge to its other endpoint.
    const auto& ep = ends.at(edge);
    auto [c0, s0] = ep[0];
    auto [c1, s1] = ep[1];
    if (c0 == cur_crossing && s0 == out_slot) {
      cur_crossing = c1;
      cur_slot = s1;
    } else {
      cur_crossing = c0;
      cur_slot = s0;
    }
    ++steps;
  } while (!(cur_crossing == 0 && cur_slot == 0));
  tr.single_component = (steps == 2 * k);
  return tr;
}

}  // namespace

bool is_knot_pd(const PlanarDiagram& pd) {
  pd.validate();
  return traverse(pd).single_component;
}

long long writhe_pd(const PlanarDiagram& pd) {
  pd.validate();
  const Traversal tr = traverse(pd);
  if (!tr.single_component)
    throw MultiComponent("writhe_pd: diagram is not a single component");
  long long w = 0;
  for (std::size_t c = 0; c < pd.crossing_count(); ++c) {
    const auto& dir = tr.slot_dir[c];
    const bool under_forward = dir[0] == +1;  // under runs slot0 -> slot2
    const bool over_forward = dir[1] == +1;   // over runs slot1 -> slot3
    // With under flowing slot0->slot2 the crossing is positive exactly when
    // the over-strand flows slot3->slot1; reversing both flips nothing.
    w += (under_forward != over_forward) ? +1 : -1;
  }
  return w;
}

LaurentPoly jones_from_pd(const PlanarDiagram& pd) {
  if (!is_knot_pd(pd))
    throw MultiComponent("jones_from_pd: diagram is not a single component");
  const long long w = writhe_pd(pd);
  const std::int64_t e = -3 * w;
  const LaurentPoly framing =
      LaurentPoly::monomial(Var::A, e, (e % 2 == 0) ? 1 : -1);
  return convert(framing * kauffman_bracket_pd(pd), Var::t);
}

PlanarDiagram parse_pd(const std::string& text) {
  PlanarDiagram pd;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("PD syntax error at position " +
                                std::to_string(pos) + ": " + what);
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != 'X') fail("expected 'X'");
    ++pos;
    skip();
    if (pos >= text.size() || (text[pos] != '(' && text[pos] != '[')) fail("expected '('");
    const char close = text[pos] == '(' ? ')' : ']';
    ++pos;
    PdCrossing x{};
    for (int i = 0; i < 4; ++i) {
      skip();
      std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) fail("expected an edge number");
      x.e[i] = std::stoi(text.substr(start, pos - start));
      skip();
    }
    if (pos >= text.size() || text[pos] != close) fail("expected closing bracket");
    ++pos;
    pd.crossings.push_back(x);
    skip();
  }
  if (pd.crossings.empty()) fail("empty PD code");
  pd.validate();
  return pd;
}

std::string pd_to_string(const PlanarDiagram& pd) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    if (i) out << ", ";
    const auto& e = pd.crossings[i].e;
    out << "X(" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << ")";
  }
  return out.str();
}

}  // namespace hopfknots
