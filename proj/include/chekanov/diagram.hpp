#pragma once

// Planar 4-valent knot projections with quadrant signs.
//
// A crossing has four half-edge slots in counterclockwise cyclic order; the
// strand passes connect opposite slots.  The primary representation is the
// list of components, each a cyclic sequence of passes (crossing, in_slot);
// the edge structure, faces and Euler checks are derived from it.  Rewrites
// (cobordism moves) edit the pass lists and rebuild.
//
// Quadrant q at a crossing lies between slots q and q+1 (mod 4).  The
// positive quadrant pair is {q0,q2} or {q1,q3}; the strand occupying the
// matching slot pair is the one with the greater z coordinate.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chekanov/rat.hpp"

namespace chek {

struct Dart {
  int c = -1;  // crossing index
  int s = -1;  // arrival slot
  bool operator==(const Dart& o) const { return c == o.c && s == o.s; }
  bool operator<(const Dart& o) const { return c != o.c ? c < o.c : s < o.s; }
  int key() const { return c * 4 + s; }
};

struct Pass {
  int c = -1;
  int in_slot = -1;
  int out_slot() const { return (in_slot + 2) & 3; }
};

struct CrossingData {
  std::string name;
  int degree = 0;
  bool pos02 = false;  // positive quadrants {q0,q2}; otherwise {q1,q3}
};

inline bool quadrant_positive(const CrossingData& cd, int q) {
  return cd.pos02 ? (q % 2 == 0) : (q % 2 == 1);
}

class LagrangianDiagram {
 public:
  LagrangianDiagram() = default;

  LagrangianDiagram(std::vector<CrossingData> crossings,
                    std::vector<std::vector<Pass>> components)
      : crossings_(std::move(crossings)), components_(std::move(components)) {
    rebuild();
  }

  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_edges() const { return 2 * num_crossings(); }
  const CrossingData& crossing(int i) const { return crossings_.at(i); }
  CrossingData& crossing_mut(int i) { return crossings_.at(i); }
  const std::vector<CrossingData>& crossings() const { return crossings_; }
  const std::vector<std::vector<Pass>>& components() const { return components_; }

  int crossing_index(const std::string& name) const {
    for (size_t i = 0; i < crossings_.size(); ++i)
      if (crossings_[i].name == name) return static_cast<int>(i);
    return -1;
  }

  bool empty() const { return crossings_.empty(); }

  // --- derived structure ---------------------------------------------------

  // Other endpoint of the edge attached at (c, s).
  Dart other_end(int c, int s) const { return other_.at(c * 4 + s); }

  // The dart arriving at (c, s); travelling onward through the crossing.
  Dart next_straight(const Dart& d) const { return other_end(d.c, (d.s + 2) & 3); }
  // Turn left: convex corner at quadrant (s+3)&3, leave along slot s-1.
  Dart next_left(const Dart& d) const { return other_end(d.c, (d.s + 3) & 3); }
  static int left_turn_quadrant(int s) { return (s + 3) & 3; }

  int face_of(int c, int s) const { return face_of_.at(c * 4 + s); }
  int face_of(const Dart& d) const { return face_of(d.c, d.s); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  const std::vector<std::vector<Dart>>& faces() const { return faces_; }
  const std::set<int>& outer_faces() const { return outer_faces_; }
  bool is_outer(int f) const { return outer_faces_.count(f) > 0; }

  int num_parts() const { return parts_; }

  // Components as (crossing, slot) of each pass, for bookkeeping.
  int component_of_crossing(int c) const { return comp_of_crossing_.at(c); }

  // --- geometry (optional) -------------------------------------------------
  bool has_heights() const { return !heights_.empty(); }
  bool has_areas() const { return !areas_.empty(); }
  const std::optional<Rat>& height(int c) const {
    static const std::optional<Rat> none;
    return heights_.empty() ? none : heights_.at(c);
  }
  const std::optional<Rat>& area(int f) const {
    static const std::optional<Rat> none;
    return areas_.empty() ? none : areas_.at(f);
  }
  void set_heights(std::vector<std::optional<Rat>> h) { heights_ = std::move(h); }
  void set_areas(std::vector<std::optional<Rat>> a) { areas_ = std::move(a); }
  void clear_geometry() {
    heights_.clear();
    areas_.clear();
  }

  // Marks the faces holding these darts as outer (one per connected part).
  void set_outer_faces_from_darts(const std::vector<Dart>& darts) {
    outer_faces_.clear();
    for (const Dart& d : darts) outer_faces_.insert(face_of(d));
    validate_outer();
  }

  // --- checks ---------------------------------------------------------------

  // V - E + F = 2 on every connected part (rotation system is planar).
  bool euler_ok() const { return euler_ok_; }

  void require_valid() const {
    if (!euler_ok_)
      throw std::runtime_error("non-planar rotation system (Euler check failed)");
  }

  // Writhe with signs from orientation and z-order; equals tb for Lagrangian
  // projections of Legendrian knots.
  int writhe() const {
    int w = 0;
    for (int c = 0; c < num_crossings(); ++c) {
      auto [p, q] = passes_at(c);
      bool p_upper = upper_pair_has_slot(c, p.in_slot);
      int u = p_upper ? p.in_slot : q.in_slot;
      int l = p_upper ? q.in_slot : p.in_slot;
      w += ((u + 1) & 3) == l ? 1 : -1;
    }
    return w;
  }

  // The two passes through crossing c.
  std::pair<Pass, Pass> passes_at(int c) const {
    Pass a, b;
    int found = 0;
    for (const auto& comp : components_)
      for (const auto& p : comp)
        if (p.c == c) {
          (found == 0 ? a : b) = p;
          ++found;
        }
    if (found != 2) throw std::runtime_error("crossing does not have exactly two passes");
    return {a, b};
  }

  bool upper_pair_has_slot(int c, int s) const {
    // positive pair {q0,q2} corresponds to the (0,2) strand being upper
    bool even_strand = (s % 2 == 0);
    return crossings_[c].pos02 == even_strand;
  }

  void rebuild() {
    other_.assign(crossings_.size() * 4, Dart{});
    std::vector<int> seen(crossings_.size() * 4, 0);
    comp_of_crossing_.assign(crossings_.size(), -1);
    for (size_t ci = 0; ci < components_.size(); ++ci) {
      const auto& comp = components_[ci];
      if (comp.empty()) throw std::runtime_error("empty component pass list");
      for (size_t i = 0; i < comp.size(); ++i) {
        const Pass& cur = comp[i];
        const Pass& nxt = comp[(i + 1) % comp.size()];
        int tail_key = cur.c * 4 + cur.out_slot();
        int head_key = nxt.c * 4 + nxt.in_slot;
        if (seen[tail_key]++ || seen[head_key]++)
          throw std::runtime_error("slot used more than once in pass lists");
        other_[tail_key] = Dart{nxt.c, nxt.in_slot};
        other_[head_key] = Dart{cur.c, cur.out_slot()};
        comp_of_crossing_[cur.c] = static_cast<int>(ci);
      }
    }
    for (int v : seen)
      if (v != 1) throw std::runtime_error("pass lists do not cover every slot exactly once");

    trace_faces();
    heights_.clear();
    areas_.clear();
    outer_faces_.clear();
  }

 private:
  void trace_faces() {
    int darts = static_cast<int>(crossings_.size()) * 4;
    face_of_.assign(darts, -1);
    faces_.clear();
    for (int k = 0; k < darts; ++k) {
      if (face_of_[k] >= 0) continue;
      int id = static_cast<int>(faces_.size());
      std::vector<Dart> cycle;
      Dart d{k / 4, k % 4};
      while (face_of_[d.key()] < 0) {
        face_of_[d.key()] = id;
        cycle.push_back(d);
        d = next_left(d);
      }
      faces_.push_back(std::move(cycle));
    }
    // connected parts via union-find over crossings
    std::vector<int> uf(crossings_.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
    for (int c = 0; c < num_crossings(); ++c)
      for (int s = 0; s < 4; ++s) {
        Dart o = other_end(c, s);
        uf[find(c)] = find(o.c);
      }
    std::set<int> roots;
    for (int c = 0; c < num_crossings(); ++c) roots.insert(find(c));
    parts_ = static_cast<int>(roots.size());
    // per-part Euler characteristic
    euler_ok_ = true;
    std::map<int, std::array<int, 2>> tally;  // root -> {V, F}
    for (int c = 0; c < num_crossings(); ++c) tally[find(c)][0]++;
    for (const auto& f : faces_) tally[find(f.front().c)][1]++;
    for (auto& [root, vf] : tally) {
      (void)root;
      if (vf[0] - 2 * vf[0] + vf[1] != 2) euler_ok_ = false;  // V - E + F, E = 2V
    }
    if (crossings_.empty()) euler_ok_ = true;
  }

  void validate_outer() const {
    // exactly one outer face per connected part
    if (static_cast<int>(outer_faces_.size()) != parts_)
      throw std::runtime_error("outer face designation does not match connected parts");
  }

  std::vector<CrossingData> crossings_;
  std::vector<std::vector<Pass>> components_;
  std::vector<Dart> other_;
  std::vector<int> face_of_;
  std::vector<std::vector<Dart>> faces_;
  std::set<int> outer_faces_;
  std::vector<int> comp_of_crossing_;
  int parts_ = 0;
  bool euler_ok_ = true;
  std::vector<std::optional<Rat>> heights_;  // per crossing
  std::vector<std::optional<Rat>> areas_;    // per face id

  friend class DiagramBuilder;
};

// Winding numbers around each face of a 1-cycle on the diagram, given by the
// multiset of its arrival darts; zero on the outer faces.  Crossing an edge
// from the left side of a dart to its right side drops the winding by the net
// number of cycle strands running along the dart's direction.
inline std::vector<int> face_winding(const LagrangianDiagram& d,
                                     const std::map<int, int>& net_arrivals) {
  auto net = [&](const Dart& dart) {
    auto it = net_arrivals.find(dart.key());
    return it == net_arrivals.end() ? 0 : it->second;
  };
  std::vector<int> w(d.num_faces(), 0);
  std::vector<int> known(d.num_faces(), 0);
  for (int f : d.outer_faces()) known[f] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < d.num_crossings(); ++c)
      for (int s = 0; s < 4; ++s) {
        Dart head{c, s};
        Dart rev = d.other_end(c, s);
        int f1 = d.face_of(head);
        int f2 = d.face_of(rev);
        if (!known[f1] && !known[f2]) continue;
        int delta = net(head) - net(rev);  // w(left of head) - w(right of head)
        if (known[f1] && !known[f2]) {
          w[f2] = w[f1] - delta;
          known[f2] = 1;
          progress = true;
        } else if (known[f2] && !known[f1]) {
          w[f1] = w[f2] + delta;
          known[f1] = 1;
          progress = true;
        }
      }
  }
  return w;
}

// ---------------------------------------------------------------------------
// JSON: crossings with cyclic half-edge lists plus one starting dart per
// component; "positive_quadrants" is "02" or "13".

inline nlohmann::json diagram_to_json(const LagrangianDiagram& d) {
  nlohmann::json j;
  // assign edge ids deterministically by smallest dart key
  std::map<int, int> edge_id;
  int next_id = 0;
  for (int c = 0; c < d.num_crossings(); ++c)
    for (int s = 0; s < 4; ++s) {
      int k = c * 4 + s;
      if (edge_id.count(k)) continue;
      Dart o = d.other_end(c, s);
      edge_id[k] = next_id;
      edge_id[o.key()] = next_id;
      ++next_id;
    }
  j["crossings"] = nlohmann::json::array();
  for (int c = 0; c < d.num_crossings(); ++c) {
    nlohmann::json jc;
    jc["name"] = d.crossing(c).name;
    jc["degree"] = d.crossing(c).degree;
    jc["positive_quadrants"] = d.crossing(c).pos02 ? "02" : "13";
    jc["halfedges"] = {edge_id[c * 4 + 0], edge_id[c * 4 + 1], edge_id[c * 4 + 2],
                       edge_id[c * 4 + 3]};
    j["crossings"].push_back(jc);
  }
  j["components"] = nlohmann::json::array();
  for (const auto& comp : d.components()) {
    const Pass& p = comp.front();
    j["components"].push_back({d.crossing(p.c).name, p.in_slot});
  }
  j["outer_faces"] = nlohmann::json::array();
  for (int f : d.outer_faces()) {
    const Dart& rep = d.faces()[f].front();
    j["outer_faces"].push_back({d.crossing(rep.c).name, rep.s});
  }
  if (d.has_heights()) {
    nlohmann::json jh = nlohmann::json::object();
    for (int c = 0; c < d.num_crossings(); ++c)
      if (d.height(c)) jh[d.crossing(c).name] = rat_to_string(*d.height(c));
    j["heights"] = jh;
  }
  if (d.has_areas()) {
    nlohmann::json ja = nlohmann::json::array();
    for (int f = 0; f < d.num_faces(); ++f)
      if (d.area(f)) {
        const Dart& rep = d.faces()[f].front();
        ja.push_back({{"face", {d.crossing(rep.c).name, rep.s}},
                      {"area", rat_to_string(*d.area(f))}});
      }
    j["areas"] = ja;
  }
  return j;
}

inline LagrangianDiagram diagram_from_json(const nlohmann::json& j) {
  std::vector<CrossingData> crossings;
  std::vector<std::array<int, 4>> halfedges;
  std::map<std::string, int> index;
  for (const auto& jc : j.at("crossings")) {
    CrossingData cd;
    cd.name = jc.at("name").get<std::string>();
    cd.degree = jc.at("degree").get<int>();
    std::string pq = jc.at("positive_quadrants").get<std::string>();
    if (pq != "02" && pq != "13") throw std::runtime_error("positive_quadrants must be 02 or 13");
    cd.pos02 = pq == "02";
    index[cd.name] = static_cast<int>(crossings.size());
    crossings.push_back(cd);
    auto he = jc.at("halfedges");
    halfedges.push_back({he.at(0).get<int>(), he.at(1).get<int>(), he.at(2).get<int>(),
                         he.at(3).get<int>()});
  }
  // resolve edge ids into other-end lookups
  std::map<int, std::vector<Dart>> by_edge;
  for (size_t c = 0; c < halfedges.size(); ++c)
    for (int s = 0; s < 4; ++s) by_edge[halfedges[c][s]].push_back(Dart{(int)c, s});
  auto other = [&](int c, int s) -> Dart {
    const auto& ends = by_edge.at(halfedges[c][s]);
    if (ends.size() != 2) throw std::runtime_error("edge id not used exactly twice");
    return ends[0] == Dart{c, s} ? ends[1] : ends[0];
  };
  // rebuild pass lists from starting darts
  std::vector<std::vector<Pass>> components;
  std::set<int> visited;
  for (const auto& jc : j.at("components")) {
    int c = index.at(jc.at(0).get<std::string>());
    int s = jc.at(1).get<int>();
    std::vector<Pass> comp;
    Dart d{c, s};
    while (!visited.count(d.key())) {
      visited.insert(d.key());
      comp.push_back(Pass{d.c, d.s});
      d = other(d.c, (d.s + 2) & 3);
    }
    components.push_back(std::move(comp));
  }
  LagrangianDiagram diag(std::move(crossings), std::move(components));
  if (j.contains("outer_faces")) {
    std::vector<Dart> outs;
    for (const auto& jo : j.at("outer_faces"))
      outs.push_back(Dart{diag.crossing_index(jo.at(0).get<std::string>()), jo.at(1).get<int>()});
    diag.set_outer_faces_from_darts(outs);
  } else if (j.contains("outer_face")) {
    const auto& jo = j.at("outer_face");
    diag.set_outer_faces_from_darts(
        {Dart{diag.crossing_index(jo.at(0).get<std::string>()), jo.at(1).get<int>()}});
  }
  if (j.contains("heights")) {
    std::vector<std::optional<Rat>> hs(diag.num_crossings());
    for (auto& [name, val] : j.at("heights").items())
      hs.at(diag.crossing_index(name)) = rat_from_string(val.get<std::string>());
    diag.set_heights(std::move(hs));
  }
  if (j.contains("areas")) {
    std::vector<std::optional<Rat>> as(diag.num_faces());
    for (const auto& ja : j.at("areas")) {
      Dart rep{diag.crossing_index(ja.at("face").at(0).get<std::string>()),
               ja.at("face").at(1).get<int>()};
      as.at(diag.face_of(rep)) = rat_from_string(ja.at("area").get<std::string>());
    }
    diag.set_areas(std::move(as));
  }
  return diag;
}

}  // namespace chek
