#pragma once

// Admissible immersed polygons on a Lagrangian diagram: one (or, for saddle
// maps, two) positive corners, all other corners negative, convex at every
// corner, never covering the outer face.
//
// The boundary is walked with the disk on its left: at each crossing the walk
// either passes straight through or turns left, recording the corner quadrant.
// With geometry present the search prunes on the remaining action budget;
// otherwise hard combinatorial bounds apply and exceeding them is an error.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chekanov/dga.hpp"
#include "chekanov/diagram.hpp"

namespace chek {

struct SearchBounds {
  int max_corners = 16;
  int max_dart_visits = 4;
  long long max_disks = 100000;  // guards against degenerate inputs
};

struct SearchBoundExceeded : std::runtime_error {
  explicit SearchBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DiskCorner {
  int crossing = -1;
  int quadrant = -1;
  bool positive = false;
};

struct Disk {
  int pos_crossing = -1;
  int pos_quadrant = -1;
  std::vector<DiskCorner> corners;  // boundary order, positive start corner excluded
  std::vector<Dart> boundary;       // heads of the boundary walk
  std::optional<Rat> area;

  // negative corners in boundary order (second positive omitted)
  std::vector<int> negative_crossings() const {
    std::vector<int> out;
    for (const auto& c : corners)
      if (!c.positive) out.push_back(c.crossing);
    return out;
  }
};

class DiskSearch {
 public:
  DiskSearch(const LagrangianDiagram& d, SearchBounds bounds)
      : d_(d), bounds_(bounds), use_area_(d.has_heights()) {
    if (d_.outer_faces().empty() && d_.num_crossings() > 0)
      throw std::runtime_error("disk search requires an outer face designation");
  }

  // All admissible disks with the given positive corner; for n_pos = 2 the
  // second positive corner must sit on `second`.
  std::vector<Disk> enumerate(int pos_crossing, int n_pos = 1,
                              std::optional<int> second = std::nullopt) {
    if (n_pos != 1 && n_pos != 2) throw std::runtime_error("n_pos must be 1 or 2");
    if (n_pos == 2 && !second) throw std::runtime_error("two-positive search needs the second crossing");
    results_.clear();
    exceeded_.clear();
    for (int q = 0; q < 4; ++q) {
      if (!quadrant_positive(d_.crossing(pos_crossing), q)) continue;
      pos_c_ = pos_crossing;
      pos_q_ = q;
      second_ = n_pos == 2 ? second : std::nullopt;
      close_ = Dart{pos_crossing, (q + 1) & 3};
      path_.clear();
      visits_.clear();
      budget_ = std::nullopt;
      if (use_area_) budget_ = *d_.height(pos_crossing);
      walk(d_.other_end(pos_crossing, q), false);
    }
    if (!exceeded_.empty())
      throw SearchBoundExceeded("disk enumeration exceeded " + exceeded_ +
                                "; raise the search bounds or supply geometry");
    return results_;
  }

 private:
  void walk(Dart head, bool second_used) {
    if (d_.is_outer(d_.face_of(head))) return;  // disk would cover the outer face

    int corners = static_cast<int>(corner_stack_.size());
    auto& vis = visits_[head.key()];
    for (const auto& [vc, vs] : vis)
      if (vc == corners && vs == second_used) return;  // no-progress loop
    if (static_cast<int>(vis.size()) >= bounds_.max_dart_visits) {
      exceeded_ = "max_dart_visits=" + std::to_string(bounds_.max_dart_visits);
      return;
    }
    vis.push_back({corners, second_used});
    path_.push_back(head);

    if (head == close_ && (!second_ || second_used)) record();

    // pass straight through
    walk(d_.next_straight(head), second_used);

    // turn left: convex corner at quadrant (s+3)&3
    int q = LagrangianDiagram::left_turn_quadrant(head.s);
    bool positive = quadrant_positive(d_.crossing(head.c), q);
    if (positive) {
      if (second_ && !second_used && head.c == *second_ && !(head == close_)) {
        corner_stack_.push_back(DiskCorner{head.c, q, true});
        walk(d_.next_left(head), true);
        corner_stack_.pop_back();
      }
      // other positive turns are only ever the closing corner, handled above
    } else {
      bool ok = true;
      std::optional<Rat> saved = budget_;
      if (use_area_) {
        Rat h = *d_.height(head.c);
        if (!(*budget_ - h > Rat(0)))
          ok = false;  // disks have positive area
        else
          budget_ = *budget_ - h;
      } else if (static_cast<int>(corner_stack_.size()) >= bounds_.max_corners) {
        exceeded_ = "max_corners=" + std::to_string(bounds_.max_corners);
        ok = false;
      }
      if (ok) {
        corner_stack_.push_back(DiskCorner{head.c, q, false});
        walk(d_.next_left(head), second_used);
        corner_stack_.pop_back();
      }
      budget_ = saved;
    }

    path_.pop_back();
    vis.pop_back();
  }

  void record() {
    if (static_cast<long long>(results_.size()) >= bounds_.max_disks)
      throw SearchBoundExceeded("disk enumeration exceeded max_disks=" +
                                std::to_string(bounds_.max_disks));
    Disk disk;
    disk.pos_crossing = pos_c_;
    disk.pos_quadrant = pos_q_;
    disk.corners = corner_stack_;
    disk.boundary = path_;
    if (use_area_) {
      Rat a = *budget_;
      if (second_)
        for (const auto& c : corner_stack_)
          if (c.positive) a += *d_.height(c.crossing);
      disk.area = a;
    }
    results_.push_back(std::move(disk));
  }

  const LagrangianDiagram& d_;
  SearchBounds bounds_;
  bool use_area_;
  int pos_c_ = -1, pos_q_ = -1;
  std::optional<int> second_;
  Dart close_;
  std::vector<Dart> path_;
  std::vector<DiskCorner> corner_stack_;
  std::map<int, std::vector<std::pair<int, bool>>> visits_;
  std::optional<Rat> budget_;
  std::string exceeded_;
  std::vector<Disk> results_;
};

inline std::vector<Disk> enumerate_disks(const LagrangianDiagram& d, int pos_crossing,
                                         int n_pos = 1,
                                         std::optional<int> second = std::nullopt,
                                         SearchBounds bounds = {}) {
  return DiskSearch(d, bounds).enumerate(pos_crossing, n_pos, second);
}

// Face multiplicities of a disk's boundary walk (winding relative to the
// outer face); used for the exactness cross-check and the audit output.
inline std::vector<int> disk_face_multiplicities(const LagrangianDiagram& d, const Disk& disk) {
  std::map<int, int> net;
  for (const Dart& h : disk.boundary) net[h.key()] += 1;
  return face_winding(d, net);
}

// ---------------------------------------------------------------------------

struct DifferentialOptions {
  SearchBounds bounds;
  bool reverse_words = false;  // boundary-order reading direction
};

// The Chekanov differential: for each chord, sum over its one-positive-corner
// disks of the word of negative corners in boundary order.
inline Dga differential_from_diagram(const LagrangianDiagram& diag,
                                     DifferentialOptions opts = {}) {
  std::vector<Generator> gens;
  for (int c = 0; c < diag.num_crossings(); ++c) {
    Generator g;
    g.name = diag.crossing(c).name;
    g.degree = diag.crossing(c).degree;
    if (diag.has_heights() && diag.height(c)) g.action = *diag.height(c);
    gens.push_back(std::move(g));
  }
  auto alg = std::make_shared<Algebra>(std::move(gens));
  Dga dga;
  dga.alg = alg;
  DiskSearch search(diag, opts.bounds);
  for (int c = 0; c < diag.num_crossings(); ++c) {
    std::vector<Word> words;
    for (const Disk& disk : search.enumerate(c, 1)) {
      Word w = disk.negative_crossings();
      if (opts.reverse_words) std::reverse(w.begin(), w.end());
      words.push_back(std::move(w));
    }
    dga.diff.push_back(Poly(alg, std::move(words)));
  }
  return dga;
}

inline nlohmann::json disk_to_json(const LagrangianDiagram& d, const Disk& disk) {
  nlohmann::json j;
  j["positive"] = {d.crossing(disk.pos_crossing).name, disk.pos_quadrant};
  j["corners"] = nlohmann::json::array();
  for (const auto& c : disk.corners)
    j["corners"].push_back({{"crossing", d.crossing(c.crossing).name},
                            {"quadrant", c.quadrant},
                            {"positive", c.positive}});
  std::string word;
  for (int c : disk.negative_crossings()) {
    if (!word.empty()) word += "*";
    word += d.crossing(c).name;
  }
  j["word"] = word.empty() ? "1" : word;
  if (disk.area) j["area"] = rat_to_string(*disk.area);
  return j;
}

}  // namespace chek
