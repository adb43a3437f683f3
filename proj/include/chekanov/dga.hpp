#pragma once

// Chekanov differential graded algebra over Z/2: a free graded algebra
// together with a degree -1 differential given on generators and extended by
// the Leibniz rule.

#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chekanov/algebra.hpp"

namespace chek {

struct Dga {
  AlgebraPtr alg;
  std::vector<Poly> diff;  // indexed by generator

  const Poly& d(int i) const { return diff.at(i); }
  Poly d(const std::string& name) const {
    int i = alg->index_of(name);
    if (i < 0) throw std::runtime_error("unknown generator '" + name + "'");
    return diff.at(i);
  }
};

using DgaPtr = std::shared_ptr<const Dga>;

// Leibniz extension: d(uv) = d(u)v + u d(v), d(1) = 0.
inline Poly differentiate(const Dga& dga, const Poly& p) {
  if (p.algebra() && !(p.algebra() == dga.alg || *p.algebra() == *dga.alg))
    throw std::runtime_error("polynomial over a different algebra");
  Poly out = Poly::zero(dga.alg);
  for (const Word& w : p.words()) {
    for (size_t i = 0; i < w.size(); ++i) {
      // prefix * d(letter) * suffix
      Poly term = Poly(dga.alg, {Word(w.begin(), w.begin() + i)});
      term = term * dga.diff.at(w[i]);
      term = term * Poly(dga.alg, {Word(w.begin() + i + 1, w.end())});
      out += term;
    }
  }
  return out;
}

struct DgaCheckItem {
  std::string generator;
  bool degree_ok = true;
  bool d2_ok = true;
  bool action_ok = true;    // vacuously true when actions are absent
  bool action_checked = false;
  std::string detail;
};

struct DgaReport {
  std::vector<DgaCheckItem> items;
  bool pass() const {
    for (const auto& it : items)
      if (!it.degree_ok || !it.d2_ok || !it.action_ok) return false;
    return true;
  }
};

inline DgaReport verify_dga(const Dga& dga) {
  DgaReport rep;
  const Algebra& alg = *dga.alg;
  for (int i = 0; i < alg.size(); ++i) {
    DgaCheckItem item;
    item.generator = alg.gen(i).name;
    std::ostringstream detail;
    const Poly& di = dga.diff.at(i);
    int want = alg.gen(i).degree - 1;
    for (const Word& w : di.words()) {
      if (word_degree(alg, w) != want) {
        item.degree_ok = false;
        detail << "word " << word_to_string(alg, w) << " of d(" << item.generator
               << ") has degree " << word_degree(alg, w) << ", expected " << want << "; ";
      }
    }
    Poly dd = differentiate(dga, di);
    if (!dd.is_zero()) {
      item.d2_ok = false;
      detail << "d^2(" << item.generator << ") = " << to_string(dd) << "; ";
    }
    if (alg.gen(i).action) {
      item.action_checked = true;
      for (const Word& w : di.words()) {
        auto wa = word_action(alg, w);
        if (!wa) continue;
        if (!(*wa < *alg.gen(i).action)) {
          item.action_ok = false;
          detail << "word " << word_to_string(alg, w) << " does not decrease action; ";
        }
      }
    }
    item.detail = detail.str();
    rep.items.push_back(std::move(item));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// JSON round-trip.  {"generators":[{"name":..,"degree":..,"action"?:..}],
//                    "diff":{"a1":"1+b2+...", ...}}

inline nlohmann::json dga_to_json(const Dga& dga) {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : dga.alg->gens()) {
    nlohmann::json jg;
    jg["name"] = g.name;
    jg["degree"] = g.degree;
    if (g.action) jg["action"] = rat_to_string(*g.action);
    j["generators"].push_back(jg);
  }
  j["diff"] = nlohmann::json::object();
  for (int i = 0; i < dga.alg->size(); ++i)
    j["diff"][dga.alg->gen(i).name] = to_string(dga.diff.at(i));
  return j;
}

inline Dga dga_from_json(const nlohmann::json& j) {
  std::vector<Generator> gens;
  for (const auto& jg : j.at("generators")) {
    Generator g;
    g.name = jg.at("name").get<std::string>();
    g.degree = jg.at("degree").get<int>();
    if (jg.contains("action")) {
      if (jg["action"].is_string())
        g.action = rat_from_string(jg["action"].get<std::string>());
      else
        g.action = rat_from_string(jg["action"].dump());
    }
    gens.push_back(std::move(g));
  }
  auto alg = std::make_shared<Algebra>(std::move(gens));
  Dga dga;
  dga.alg = alg;
  dga.diff.resize(alg->size(), Poly::zero(alg));
  const auto& jd = j.at("diff");
  for (int i = 0; i < alg->size(); ++i) {
    const std::string& name = alg->gen(i).name;
    if (jd.contains(name)) dga.diff[i] = parse_poly(alg, jd.at(name).get<std::string>());
  }
  return dga;
}

// ---------------------------------------------------------------------------
// Degree-preserving generator bijection making two DGAs equal, if one exists.
// Used to report "identical up to naming table" results.

inline std::optional<std::vector<int>> find_dga_isomorphism(const Dga& a, const Dga& b) {
  int n = a.alg->size();
  if (n != b.alg->size()) return std::nullopt;
  std::vector<int> image(n, -1), used(n, 0);

  // candidate targets per source generator: equal degree and equal diff shape
  auto shape = [](const Dga& d, int i) {
    std::vector<size_t> lens;
    for (const auto& w : d.diff.at(i).words()) lens.push_back(w.size());
    return lens;
  };
  std::vector<std::vector<int>> cand(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (a.alg->gen(i).degree == b.alg->gen(j).degree && shape(a, i) == shape(b, j))
        cand[i].push_back(j);
    if (cand[i].empty()) return std::nullopt;
  }

  // order sources by fewest candidates
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return cand[x].size() < cand[y].size(); });

  auto translate = [&](const Poly& p) -> std::optional<Poly> {
    std::vector<Word> ws;
    for (const auto& w : p.words()) {
      Word t;
      for (int l : w) {
        if (image[l] < 0) return std::nullopt;  // not yet determined
        t.push_back(image[l]);
      }
      ws.push_back(std::move(t));
    }
    return Poly(b.alg, std::move(ws));
  };

  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == order.size()) {
      for (int i = 0; i < n; ++i) {
        auto t = translate(a.diff.at(i));
        if (!t || !(*t == b.diff.at(image[i]))) return false;
      }
      return true;
    }
    int src = order[k];
    for (int tgt : cand[src]) {
      if (used[tgt]) continue;
      image[src] = tgt;
      used[tgt] = 1;
      // partial consistency: rows fully determined so far must match
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        if (image[i] < 0) continue;
        auto t = translate(a.diff.at(i));
        if (t && !(*t == b.diff.at(image[i]))) ok = false;
      }
      if (ok && rec(k + 1)) return true;
      image[src] = -1;
      used[tgt] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return image;
}

}  // namespace chek
