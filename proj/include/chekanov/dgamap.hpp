#pragma once

// Unital algebra maps between Chekanov DGAs, given on generators and extended
// multiplicatively; chain-map verification.

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chekanov/dga.hpp"

namespace chek {

struct DgaMap {
  DgaPtr source;
  DgaPtr target;
  std::vector<Poly> assignment;  // indexed by source generator, polys over target
  bool solver_produced = false;  // corrections found by the chain-map solver

  const Poly& image(int i) const { return assignment.at(i); }
  Poly image(const std::string& name) const {
    int i = source->alg->index_of(name);
    if (i < 0) throw std::runtime_error("unknown generator '" + name + "'");
    return assignment.at(i);
  }
};

inline DgaMap identity_map(const DgaPtr& dga) {
  DgaMap f;
  f.source = dga;
  f.target = dga;
  for (int i = 0; i < dga->alg->size(); ++i)
    f.assignment.push_back(Poly::generator(dga->alg, i));
  return f;
}

inline Poly apply_map(const DgaMap& f, const Poly& p) {
  if (p.algebra() && !(p.algebra() == f.source->alg || *p.algebra() == *f.source->alg))
    throw std::runtime_error("polynomial over a different algebra than the map source");
  Poly out = Poly::zero(f.target->alg);
  for (const Word& w : p.words()) {
    Poly prod = Poly::one(f.target->alg);
    for (int letter : w) prod = prod * f.assignment.at(letter);
    out += prod;
  }
  return out;
}

// g after f (f applied first). Requires f.target and g.source to agree.
inline DgaMap compose(const DgaMap& g, const DgaMap& f) {
  if (!(f.target == g.source || *f.target->alg == *g.source->alg))
    throw std::runtime_error("compose: incompatible algebras");
  DgaMap h;
  h.source = f.source;
  h.target = g.target;
  h.solver_produced = f.solver_produced || g.solver_produced;
  for (const auto& p : f.assignment) h.assignment.push_back(apply_map(g, p));
  // degree preservation check, wordwise
  for (int i = 0; i < h.source->alg->size(); ++i) {
    int d = h.source->alg->gen(i).degree;
    for (const Word& w : h.assignment[i].words())
      if (word_degree(*h.target->alg, w) != d)
        throw std::runtime_error("compose: image of '" + h.source->alg->gen(i).name +
                                 "' is not degree-preserving");
  }
  return h;
}

struct ChainMapCheckItem {
  std::string generator;
  bool degree_ok = true;
  bool chain_ok = true;
  std::string lhs;  // f(d_src g)
  std::string rhs;  // d_tgt(f g)
};

struct ChainMapReport {
  std::vector<ChainMapCheckItem> items;
  bool pass() const {
    for (const auto& it : items)
      if (!it.degree_ok || !it.chain_ok) return false;
    return true;
  }
};

inline ChainMapReport verify_chain_map(const DgaMap& f) {
  ChainMapReport rep;
  const Algebra& src = *f.source->alg;
  for (int i = 0; i < src.size(); ++i) {
    ChainMapCheckItem item;
    item.generator = src.gen(i).name;
    for (const Word& w : f.assignment.at(i).words())
      if (word_degree(*f.target->alg, w) != src.gen(i).degree) item.degree_ok = false;
    Poly lhs = apply_map(f, f.source->diff.at(i));
    Poly rhs = differentiate(*f.target, f.assignment.at(i));
    item.lhs = to_string(lhs);
    item.rhs = to_string(rhs);
    item.chain_ok = lhs == rhs;
    rep.items.push_back(std::move(item));
  }
  return rep;
}

// ---------------------------------------------------------------------------

inline nlohmann::json dgamap_to_json(const DgaMap& f) {
  nlohmann::json j;
  j["source"] = dga_to_json(*f.source);
  j["target"] = dga_to_json(*f.target);
  j["assignment"] = nlohmann::json::object();
  for (int i = 0; i < f.source->alg->size(); ++i)
    j["assignment"][f.source->alg->gen(i).name] = to_string(f.assignment.at(i));
  if (f.solver_produced) j["solver_produced"] = true;
  return j;
}

inline DgaMap dgamap_from_json(const nlohmann::json& j) {
  DgaMap f;
  f.source = std::make_shared<Dga>(dga_from_json(j.at("source")));
  f.target = std::make_shared<Dga>(dga_from_json(j.at("target")));
  const auto& ja = j.at("assignment");
  for (int i = 0; i < f.source->alg->size(); ++i) {
    const std::string& name = f.source->alg->gen(i).name;
    if (!ja.contains(name)) throw std::runtime_error("map missing assignment for '" + name + "'");
    f.assignment.push_back(parse_poly(f.target->alg, ja.at(name).get<std::string>()));
  }
  f.solver_produced = j.value("solver_produced", false);
  return f;
}

}  // namespace chek
