#pragma once

// Plat-encoded front projections and their resolution into Lagrangian
// diagrams.
//
// A front is a left-to-right sequence of columns: CuspOpen ('L') inserts two
// strands, Cross ('X') swaps two adjacent strands, CuspClose ('R') ends two
// adjacent strands in a right cusp.  Resolution turns every front crossing
// into a transverse double point and every right cusp into a double point
// with a small loop east of it; positive quadrants are east/west throughout.
//
// Geometry: the diagram is first laid out as piecewise-linear curves on a
// rational grid, which fixes the planar embedding (and the outer face).  Face
// areas are then chosen exactly, as a solution of the closure and positivity
// conditions every Lagrangian projection satisfies: the signed area enclosed
// by each component vanishes, and every chord has positive action, the action
// being the area sum of the loop running from the upper to the lower chord
// endpoint.  With areas of that shape, the area of every admissible disk
// equals h(positive corner) - sum h(negative corners) on the nose.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chekanov/diagram.hpp"
#include "chekanov/lp.hpp"
#include "chekanov/rat.hpp"

namespace chek {

struct FrontEvent {
  char t = 'X';      // 'L', 'X', 'R'
  int at = 1;        // 1-based stack position
  std::string name;  // chord name for X/R; optional
};

struct FrontDiagram {
  std::vector<FrontEvent> events;
};

inline FrontDiagram front_from_json(const nlohmann::json& j) {
  FrontDiagram f;
  for (const auto& je : j.at("events")) {
    FrontEvent e;
    std::string t = je.at("t").get<std::string>();
    if (t != "L" && t != "X" && t != "R")
      throw std::runtime_error("front event type must be L, X or R");
    e.t = t[0];
    e.at = je.at("at").get<int>();
    if (je.contains("name")) e.name = je.at("name").get<std::string>();
    f.events.push_back(e);
  }
  return f;
}

inline nlohmann::json front_to_json(const FrontDiagram& f) {
  nlohmann::json j;
  int strands = 0, maxs = 0;
  for (const auto& e : f.events) {
    strands += e.t == 'L' ? 2 : e.t == 'R' ? -2 : 0;
    maxs = std::max(maxs, strands);
  }
  j["strands_max"] = maxs;
  j["events"] = nlohmann::json::array();
  for (const auto& e : f.events) {
    nlohmann::json je;
    je["t"] = std::string(1, e.t);
    je["at"] = e.at;
    if (!e.name.empty()) je["name"] = e.name;
    j["events"].push_back(je);
  }
  return j;
}

inline void validate_front(const FrontDiagram& f) {
  int strands = 0;
  for (size_t i = 0; i < f.events.size(); ++i) {
    const auto& e = f.events[i];
    if (e.t == 'L') {
      if (e.at < 1 || e.at > strands + 1)
        throw std::runtime_error("event " + std::to_string(i) + ": cusp open out of range");
      strands += 2;
    } else {
      if (e.at < 1 || e.at + 1 > strands)
        throw std::runtime_error("event " + std::to_string(i) + ": position out of range");
      if (e.t == 'R') strands -= 2;
    }
  }
  if (strands != 0) throw std::runtime_error("front does not close (strand count nonzero)");
}

namespace detail {

// union-find with integer offsets, for Maslov potentials
class OffsetUnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    offset_.push_back(0);
    return static_cast<int>(parent_.size()) - 1;
  }
  std::pair<int, int> find(int x) {  // (root, value(x) - value(root))
    if (parent_[x] == x) return {x, 0};
    auto [r, o] = find(parent_[x]);
    parent_[x] = r;
    offset_[x] += o;
    return {r, offset_[x]};
  }
  bool relate(int a, int b, int d) {  // impose value(a) = value(b) + d
    auto [ra, oa] = find(a);
    auto [rb, ob] = find(b);
    if (ra == rb) return oa == ob + d;
    parent_[ra] = rb;
    offset_[ra] = ob + d - oa;
    return true;
  }
  int relative(int a, int b) {
    auto [ra, oa] = find(a);
    auto [rb, ob] = find(b);
    if (ra != rb) throw std::runtime_error("potentials not related");
    return oa - ob;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> offset_;
};

struct Vec2 {
  Rat x, y;
};
using Polyline = std::vector<Vec2>;

inline Rat shoelace(const std::vector<Vec2>& pts) {
  Rat total(0);
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % pts.size()];
    total += a.x * b.y - b.x * a.y;
  }
  return total / 2;
}

}  // namespace detail

struct ResolveOptions {
  bool with_geometry = true;
  bool geometry_required = true;  // throw when no exact realization is found
  bool require_grading = true;    // throw on nonzero rotation number
  int crossing_degree_sign = -1;  // degree(X) = sign * (mu(upper) - mu(lower))
};

struct ResolvedFront {
  LagrangianDiagram diagram;
  std::map<std::string, int> chord_degrees;
  int front_components = 0;
  bool graded = true;
};

class FrontResolver {
 public:
  FrontResolver(const FrontDiagram& front, ResolveOptions opts) : front_(front), opts_(opts) {}

  ResolvedFront run() {
    validate_front(front_);
    ResolvedFront out;
    if (front_.events.empty()) {
      out.diagram = LagrangianDiagram({}, {});
      return out;
    }
    build_crossings();
    out.graded = assign_degrees();
    build_components();

    LagrangianDiagram diag(crossings_, components_);
    diag.require_valid();
    locate_outer(diag);

    if (opts_.with_geometry) attach_geometry(diag);

    out.diagram = std::move(diag);
    out.front_components = count_front_components();
    for (const auto& cd : out.diagram.crossings()) out.chord_degrees[cd.name] = cd.degree;
    return out;
  }

 private:
  struct StrandState {
    int origin_key = -1;  // 4*c+s of the open half-edge, or -1 when born at a cusp
    int cap_id = -1;
    detail::Polyline points;
  };

  void build_crossings() {
    using detail::Vec2;
    std::vector<StrandState> stack;
    std::map<int, std::pair<int, detail::Polyline>> cap_half;
    int next_cap = 0;
    int auto_name = 0;

    auto new_crossing = [&](const std::string& name, int degree) {
      CrossingData cd;
      cd.name = name.empty() ? "x" + std::to_string(++auto_name) : name;
      cd.degree = degree;
      cd.pos02 = false;  // resolved fronts: positive quadrants east/west = {q1,q3}
      crossings_.push_back(cd);
      return static_cast<int>(crossings_.size()) - 1;
    };

    auto attach = [&](StrandState& st, int c, int s, const Vec2& cp) {
      st.points.push_back(cp);
      int head = 4 * c + s;
      if (st.origin_key >= 0) {
        add_edge(st.origin_key, head, st.points);
      } else {
        auto it = cap_half.find(st.cap_id);
        if (it == cap_half.end()) {
          cap_half[st.cap_id] = {head, st.points};
        } else {
          detail::Polyline joined(it->second.second.rbegin(), it->second.second.rend());
          joined.insert(joined.end(), st.points.begin() + 1, st.points.end());
          add_edge(it->second.first, head, joined);
          cap_half.erase(it);
        }
      }
    };

    for (size_t ev = 0; ev < front_.events.size(); ++ev) {
      const FrontEvent& e = front_.events[ev];
      Rat x0(static_cast<long long>(3 * ev));
      int k = e.at - 1;
      int n = static_cast<int>(stack.size());
      auto level = [&](int j) { return Rat(-(j + 1)); };

      if (e.t == 'X') {
        int c = new_crossing(e.name, 0);
        event_crossing_[ev] = c;
        Vec2 cp{x0 + Rat(3, 2), level(k) - Rat(1, 2)};
        stack[k].points.push_back(Vec2{x0, level(k)});
        stack[k + 1].points.push_back(Vec2{x0, level(k + 1)});
        attach(stack[k], c, 1, cp);      // upper in at NW
        attach(stack[k + 1], c, 2, cp);  // lower in at SW
        stack[k] = StrandState{4 * c + 0, -1, {cp, Vec2{x0 + 3, level(k)}}};
        stack[k + 1] = StrandState{4 * c + 3, -1, {cp, Vec2{x0 + 3, level(k + 1)}}};
        for (int j = 0; j < n; ++j)
          if (j != k && j != k + 1) run_straight(stack[j], x0, level(j));
      } else if (e.t == 'R') {
        int c = new_crossing(e.name, 1);
        event_crossing_[ev] = c;
        Vec2 cp{x0 + 1, level(k) - Rat(1, 2)};
        stack[k].points.push_back(Vec2{x0, level(k)});
        stack[k + 1].points.push_back(Vec2{x0, level(k + 1)});
        attach(stack[k], c, 1, cp);
        attach(stack[k + 1], c, 2, cp);
        detail::Polyline loop{cp, Vec2{x0 + 2, level(k + 1)},
                              Vec2{x0 + Rat(5, 2), level(k) - Rat(1, 2)}, Vec2{x0 + 2, level(k)},
                              cp};
        add_edge(4 * c + 3, 4 * c + 0, loop);
        stack.erase(stack.begin() + k, stack.begin() + k + 2);
        n -= 2;
        for (int j = 0; j < n; ++j) {
          if (j >= k) {
            stack[j].points.push_back(Vec2{x0, level(j + 2)});
            stack[j].points.push_back(Vec2{x0 + Rat(5, 2), level(j + 2)});
            stack[j].points.push_back(Vec2{x0 + 3, level(j)});
          } else {
            run_straight(stack[j], x0, level(j));
          }
        }
      } else {  // 'L'
        int nu = uf_.add(), nl = uf_.add();
        uf_.relate(nu, nl, 1);
        node_of_event_[ev] = {nu, nl};
        for (int j = 0; j < n; ++j) {
          if (j >= k) {
            stack[j].points.push_back(Vec2{x0, level(j)});
            stack[j].points.push_back(Vec2{x0 + 1, level(j + 2)});
            stack[j].points.push_back(Vec2{x0 + 3, level(j + 2)});
          } else {
            run_straight(stack[j], x0, level(j));
          }
        }
        Vec2 cusp{x0 + Rat(3, 2), level(k) - Rat(1, 2)};
        StrandState up{-1, next_cap, {cusp, Vec2{x0 + 3, level(k)}}};
        StrandState lo{-1, next_cap, {cusp, Vec2{x0 + 3, level(k + 1)}}};
        ++next_cap;
        stack.insert(stack.begin() + k, {up, lo});
      }
    }
    if (!cap_half.empty()) throw std::runtime_error("unmatched cusp cap");
  }

  void run_straight(StrandState& st, const Rat& x0, const Rat& y) {
    st.points.push_back(detail::Vec2{x0, y});
    st.points.push_back(detail::Vec2{x0 + 3, y});
  }

  void add_edge(int key_a, int key_b, const detail::Polyline& pts) {
    adjacency_[key_a] = key_b;
    adjacency_[key_b] = key_a;
    detail::Polyline cleaned;
    for (const auto& p : pts)
      if (cleaned.empty() || !(cleaned.back().x == p.x && cleaned.back().y == p.y))
        cleaned.push_back(p);
    int ek = std::min(key_a, key_b);
    edge_polyline_[ek] = cleaned;
    edge_start_[ek] = key_a;
  }

  // Maslov potentials; returns false when ungraded (and allowed to be)
  bool assign_degrees() {
    std::vector<int> nodes;
    std::vector<std::pair<size_t, std::pair<int, int>>> xs;
    bool consistent = true;
    for (size_t ev = 0; ev < front_.events.size(); ++ev) {
      const FrontEvent& e = front_.events[ev];
      int k = e.at - 1;
      if (e.t == 'L') {
        auto [nu, nl] = node_of_event_.at(ev);
        nodes.insert(nodes.begin() + k, {nu, nl});
      } else if (e.t == 'X') {
        xs.push_back({ev, {nodes[k], nodes[k + 1]}});
        std::swap(nodes[k], nodes[k + 1]);
      } else {
        if (!uf_.relate(nodes[k], nodes[k + 1], 1)) consistent = false;
        cusp_pairs_.push_back({nodes[k], nodes[k + 1]});
        nodes.erase(nodes.begin() + k, nodes.begin() + k + 2);
      }
    }
    if (!consistent) {
      if (opts_.require_grading)
        throw std::runtime_error(
            "inconsistent Maslov potential (component has nonzero rotation number)");
      return false;
    }
    for (auto& [ev, nn] : xs) {
      int rel = uf_.relative(nn.first, nn.second);
      crossings_[event_crossing_.at(ev)].degree = opts_.crossing_degree_sign * rel;
    }
    return true;
  }

  void build_components() {
    std::set<int> visited;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c)
      for (int s = 0; s < 4; ++s) {
        int key = 4 * c + s;
        if (visited.count(key)) continue;
        std::vector<Pass> comp;
        int cur = key;
        while (!visited.count(cur)) {
          visited.insert(cur);
          comp.push_back(Pass{cur / 4, cur % 4});
          int depart = 4 * (cur / 4) + (((cur % 4) + 2) & 3);
          visited.insert(depart);
          cur = adjacency_.at(depart);
        }
        components_.push_back(std::move(comp));
      }
  }

  int count_front_components() const {
    std::map<int, std::vector<int>> adj;
    for (auto& [ev, nn] : node_of_event_) {
      (void)ev;
      adj[nn.first].push_back(nn.second);
      adj[nn.second].push_back(nn.first);
    }
    for (const auto& [u, l] : cusp_pairs_) {
      adj[u].push_back(l);
      adj[l].push_back(u);
    }
    std::set<int> seen;
    int comps = 0;
    for (const auto& [n, nbrs] : adj) {
      (void)nbrs;
      if (seen.count(n)) continue;
      ++comps;
      std::vector<int> q{n};
      while (!q.empty()) {
        int x = q.back();
        q.pop_back();
        if (!seen.insert(x).second) continue;
        for (int y : adj[x]) q.push_back(y);
      }
    }
    return comps;
  }

  detail::Polyline oriented_polyline(int from_key, int to_key) const {
    int ek = std::min(from_key, to_key);
    detail::Polyline p = edge_polyline_.at(ek);
    if (edge_start_.at(ek) != from_key) std::reverse(p.begin(), p.end());
    return p;
  }

  // Outer faces have negative signed boundary area in the drawn layout.
  void locate_outer(LagrangianDiagram& diag) const {
    std::vector<Dart> outer_darts;
    for (int f = 0; f < diag.num_faces(); ++f) {
      std::vector<detail::Vec2> poly;
      for (const Dart& d : diag.faces()[f]) {
        Dart tail = diag.other_end(d.c, d.s);
        auto pts = oriented_polyline(4 * tail.c + tail.s, 4 * d.c + d.s);
        poly.insert(poly.end(), pts.begin(), pts.end());
      }
      if (detail::shoelace(poly) < Rat(0)) outer_darts.push_back(diag.faces()[f].front());
    }
    diag.set_outer_faces_from_darts(outer_darts);
  }

  // Exact areas and chord actions via the feasibility system described above.
  void attach_geometry(LagrangianDiagram& diag) {
    int F = diag.num_faces();
    std::vector<int> var_of_face(F, -1);
    int nface_vars = 0;
    for (int f = 0; f < F; ++f)
      if (!diag.is_outer(f)) var_of_face[f] = nface_vars++;

    // subloop winding vector: upper-to-lower walk along the component
    auto subloop_winding = [&](int c) -> std::vector<int> {
      auto [p, q] = diag.passes_at(c);
      bool p_upper = diag.upper_pair_has_slot(c, p.in_slot);
      Pass upper = p_upper ? p : q;
      Pass lower = p_upper ? q : p;
      const auto& comp = diag.components()[diag.component_of_crossing(c)];
      size_t start = 0, n = comp.size();
      while (!(comp[start].c == upper.c && comp[start].in_slot == upper.in_slot)) ++start;
      std::map<int, int> net;
      for (size_t i = 1; i <= n; ++i) {
        const Pass& pass = comp[(start + i) % n];
        net[Dart{pass.c, pass.in_slot}.key()] += 1;
        if (pass.c == lower.c && pass.in_slot == lower.in_slot) break;
      }
      return face_winding(diag, net);
    };

    // mixed chords: z-difference of the two components at a crossing, relative
    // to a base crossing of the same component pair, is again an area sum
    struct MixedGroup {
      int comp_a, comp_b;
      std::vector<int> crossings;
    };
    std::map<std::pair<int, int>, MixedGroup> mixed;
    std::vector<std::vector<int>> self_w;
    std::vector<int> self_c;
    for (int c = 0; c < diag.num_crossings(); ++c) {
      auto [p, q] = diag.passes_at(c);
      int ca = diag.component_of_crossing(c);
      (void)p;
      (void)q;
      auto comp_of_pass = [&](const Pass& pass) {
        for (size_t ci = 0; ci < diag.components().size(); ++ci)
          for (const Pass& x : diag.components()[ci])
            if (x.c == pass.c && x.in_slot == pass.in_slot) return static_cast<int>(ci);
        return -1;
      };
      int cp = comp_of_pass(p), cq = comp_of_pass(q);
      (void)ca;
      if (cp == cq) {
        self_w.push_back(subloop_winding(c));
        self_c.push_back(c);
      } else {
        auto key = std::minmax(cp, cq);
        auto& g = mixed[{key.first, key.second}];
        g.comp_a = key.first;
        g.comp_b = key.second;
        g.crossings.push_back(c);
      }
    }

    int ndelta = static_cast<int>(mixed.size());
    int nvars = nface_vars + 2 * ndelta;  // areas, then delta = plus - minus per pair
    std::vector<BigRat> lower(nvars, BigRat(0));
    for (int i = 0; i < nface_vars; ++i) lower[i] = BigRat(1);

    std::vector<LinearConstraint> cons;
    auto area_row = [&](const std::vector<int>& w) {
      std::vector<BigRat> row(nvars, BigRat(0));
      for (int f = 0; f < F; ++f)
        if (var_of_face[f] >= 0 && w[f] != 0) row[var_of_face[f]] = BigRat(w[f]);
      return row;
    };

    // closure: each component encloses zero signed area
    for (const auto& comp : diag.components()) {
      std::map<int, int> net;
      for (const Pass& pass : comp) net[Dart{pass.c, pass.in_slot}.key()] += 1;
      auto w = face_winding(diag, net);
      LinearConstraint lc;
      lc.coeff = area_row(w);
      lc.rhs = BigRat(0);
      lc.kind = LinearConstraint::EQ;
      bool all_zero = true;
      for (const auto& v : lc.coeff)
        if (v != BigRat(0)) all_zero = false;
      if (!all_zero) cons.push_back(std::move(lc));
    }
    // self chords: positive action, h = sum of subloop windings
    for (const auto& w : self_w) {
      LinearConstraint lc;
      lc.coeff = area_row(w);
      lc.rhs = BigRat(1);
      lc.kind = LinearConstraint::GE;
      cons.push_back(std::move(lc));
    }
    // mixed chords
    struct MixedTerm {
      int crossing;
      int sign;                // +1 when the base pair's first component is upper
      std::vector<int> loop_w; // winding of the comparison loop against the base
      int pair_index;
    };
    std::vector<MixedTerm> mixed_terms;
    {
      int pair_index = 0;
      for (auto& [key, g] : mixed) {
        (void)key;
        int base = g.crossings.front();
        auto pass_on_comp = [&](int crossing, int comp_index) -> Pass {
          for (const Pass& x : diag.components()[comp_index])
            if (x.c == crossing) return x;
          throw std::runtime_error("pass lookup failed");
        };
        for (int c : g.crossings) {
          MixedTerm t;
          t.crossing = c;
          t.pair_index = pair_index;
          Pass pa = pass_on_comp(c, g.comp_a);
          bool a_upper = diag.upper_pair_has_slot(c, pa.in_slot);
          t.sign = a_upper ? 1 : -1;
          if (c == base) {
            t.loop_w.assign(F, 0);
          } else {
            // loop: component a from base to c, then component b from c to base
            std::map<int, int> net;
            auto walk = [&](int comp_index, int from, int to) {
              const auto& comp = diag.components()[comp_index];
              size_t n = comp.size(), start = 0;
              Pass fp = pass_on_comp(from, comp_index);
              while (!(comp[start].c == fp.c && comp[start].in_slot == fp.in_slot)) ++start;
              for (size_t i = 1; i <= n; ++i) {
                const Pass& pass = comp[(start + i) % n];
                net[Dart{pass.c, pass.in_slot}.key()] += 1;
                if (pass.c == to) break;
              }
            };
            walk(g.comp_a, base, c);
            walk(g.comp_b, c, base);
            t.loop_w = face_winding(diag, net);
          }
          mixed_terms.push_back(std::move(t));
        }
        ++pair_index;
      }
    }
    for (const auto& t : mixed_terms) {
      // h = sign * (delta_pair - sum loop_w * A) >= 1
      LinearConstraint lc;
      lc.coeff = area_row(t.loop_w);
      for (auto& v : lc.coeff) v = BigRat(-1) * v;
      lc.coeff[nface_vars + 2 * t.pair_index] += BigRat(1);
      lc.coeff[nface_vars + 2 * t.pair_index + 1] += BigRat(-1);
      if (t.sign < 0)
        for (auto& v : lc.coeff) v = BigRat(-1) * v;
      lc.rhs = BigRat(1);
      lc.kind = LinearConstraint::GE;
      cons.push_back(std::move(lc));
    }

    auto sol = solve_feasible(nvars, lower, cons);
    if (!sol) {
      if (opts_.geometry_required)
        throw std::runtime_error("no exact area assignment exists for this diagram");
      return;
    }
    auto to_rat = [](const BigRat& v) {
      return Rat(v.numerator().convert_to<long long>(), v.denominator().convert_to<long long>());
    };
    std::vector<std::optional<Rat>> areas(F);
    for (int f = 0; f < F; ++f)
      if (var_of_face[f] >= 0) areas[f] = to_rat((*sol)[var_of_face[f]]);
    std::vector<std::optional<Rat>> heights(diag.num_crossings());
    for (size_t i = 0; i < self_c.size(); ++i) {
      BigRat h(0);
      for (int f = 0; f < F; ++f)
        if (var_of_face[f] >= 0 && self_w[i][f] != 0)
          h += BigRat(self_w[i][f]) * (*sol)[var_of_face[f]];
      heights[self_c[i]] = to_rat(h);
    }
    for (const auto& t : mixed_terms) {
      BigRat h = (*sol)[nface_vars + 2 * t.pair_index] - (*sol)[nface_vars + 2 * t.pair_index + 1];
      for (int f = 0; f < F; ++f)
        if (var_of_face[f] >= 0 && t.loop_w[f] != 0)
          h -= BigRat(t.loop_w[f]) * (*sol)[var_of_face[f]];
      if (t.sign < 0) h = -h;
      heights[t.crossing] = to_rat(h);
    }
    for (int c = 0; c < diag.num_crossings(); ++c)
      if (!heights[c] || !(*heights[c] > Rat(0)))
        throw std::runtime_error("internal: non-positive chord action");
    diag.set_areas(std::move(areas));
    diag.set_heights(std::move(heights));
  }

  const FrontDiagram& front_;
  ResolveOptions opts_;
  std::vector<CrossingData> crossings_;
  std::vector<std::vector<Pass>> components_;
  std::map<int, int> adjacency_;
  std::map<int, detail::Polyline> edge_polyline_;
  std::map<int, int> edge_start_;
  std::map<size_t, int> event_crossing_;
  std::map<size_t, std::pair<int, int>> node_of_event_;
  std::vector<std::pair<int, int>> cusp_pairs_;
  detail::OffsetUnionFind uf_;
};

inline ResolvedFront resolve_front(const FrontDiagram& f, ResolveOptions opts = {}) {
  return FrontResolver(f, opts).run();
}

// ---------------------------------------------------------------------------
// Classical invariants: tb as the writhe of the resolved diagram, r from cusp
// traversal directions.

struct ClassicalInvariants {
  int tb = 0;
  int r = 0;
};

inline ClassicalInvariants classical_invariants(const FrontDiagram& f) {
  validate_front(f);
  struct CuspLink {
    int partner;
    bool upper;
  };
  std::map<int, CuspLink> west, east;
  int components = 0, down = 0, up = 0;
  {
    std::vector<int> nodes;
    int next_node = 0;
    for (const auto& e : f.events) {
      int k = e.at - 1;
      if (e.t == 'L') {
        int nu = next_node++, nl = next_node++;
        west[nu] = {nl, true};
        west[nl] = {nu, false};
        nodes.insert(nodes.begin() + k, {nu, nl});
      } else if (e.t == 'X') {
        std::swap(nodes[k], nodes[k + 1]);
      } else {
        east[nodes[k]] = {nodes[k + 1], true};
        east[nodes[k + 1]] = {nodes[k], false};
        nodes.erase(nodes.begin() + k, nodes.begin() + k + 2);
      }
    }
  }
  std::set<int> seen;
  for (auto& [n0, w] : west) {
    (void)w;
    if (seen.count(n0)) continue;
    ++components;
    int node = n0;
    bool eastward = true;
    do {
      seen.insert(node);
      if (eastward) {
        (east.at(node).upper ? down : up)++;
        node = east.at(node).partner;
        eastward = false;
      } else {
        (west.at(node).upper ? down : up)++;
        node = west.at(node).partner;
        eastward = true;
      }
    } while (node != n0 || !eastward);
  }
  if (components != 1)
    throw std::runtime_error("classical invariants: multi-component fronts not supported");

  ResolveOptions opts;
  opts.with_geometry = false;
  opts.geometry_required = false;
  opts.require_grading = false;
  auto resolved = resolve_front(f, opts);
  ClassicalInvariants inv;
  inv.tb = resolved.diagram.writhe();
  inv.r = (down - up) / 2;
  return inv;
}

}  // namespace chek
