#include "scva/brst.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "scva/parser.hpp"

namespace scva {

namespace {

using Key = std::pair<int, int>;  // (twisted weight2, charge)

Grading grading_of(Twist t) { return t == Twist::A ? Grading::A : Grading::B; }
int charge_step(Twist t) { return t == Twist::A ? 1 : -1; }

std::string block_name(int weight2, int charge) {
  return "w=" + to_string(half(weight2)) + ".q=" + std::to_string(charge);
}

State column_state(const TruncatedBlock& b, const std::vector<Monomial>& target, std::size_t j) {
  State s;
  for (std::size_t i = 0; i < target.size(); ++i) s.add(target[i], b.q[i][j]);
  return s;
}

// Blocks by key plus im Q0 inside each block as a reduced span.
struct Complex {
  const SpaceSpec& space;
  Twist twist;
  std::vector<TruncatedBlock> blocks;
  std::map<Key, std::size_t> index;
  std::map<Key, StateSpan> images;
  StructureSpec top;

  Complex(const SpaceSpec& sp, Twist t, int cutoff, std::size_t budget)
      : space(sp), twist(t), blocks(brst_blocks(sp, t, cutoff, budget)), top(scva::twist(n2_structure(sp), t)) {
    for (std::size_t i = 0; i < blocks.size(); ++i) index[{blocks[i].weight2, blocks[i].charge}] = i;
    for (const auto& b : blocks) {
      auto it = index.find({b.weight2, b.target_charge});
      if (it == index.end()) continue;
      StateSpan& span = images[{b.weight2, b.target_charge}];
      const auto& target = blocks[it->second].basis;
      for (std::size_t j = 0; j < b.basis.size(); ++j) span.insert(column_state(b, target, j));
    }
  }

  const TruncatedBlock* find(int weight2, int charge) const {
    auto it = index.find({weight2, charge});
    return it == index.end() ? nullptr : &blocks[it->second];
  }

  // Canonical representative of the class of a homogeneous state.
  State normal_form(const State& v, int weight2, int charge) const {
    auto it = images.find({weight2, charge});
    return it == images.end() ? v : it->second.reduce(v);
  }

  State q0(const State& v) const { return nth_product(space, top.at("Q"), v, 0); }
};

Key key_of(const SpaceSpec& space, const State& v, Grading g) {
  if (v.is_zero()) return {0, 0};
  const Monomial& m = v.begin()->first;
  return {weight2(space, m, g), charge(m)};
}

}  // namespace

std::vector<TruncatedBlock> brst_blocks(const SpaceSpec& space, Twist tw, int cutoff, std::size_t budget) {
  if (!space.polarized) throw StructureError("BRST cohomology needs a polarized space");
  const Grading g = grading_of(tw);
  // The enumeration guard allows every block of the truncated complex to be
  // full; individual blocks are checked against the budget below.
  const std::size_t guard = budget * static_cast<std::size_t>(cutoff + 1) * static_cast<std::size_t>(4 * space.rank() + 1);
  const auto monos = enumerate_monomials(space, g, 2 * cutoff, guard);

  std::map<Key, std::vector<Monomial>> groups;
  for (const auto& m : monos) groups[{weight2(space, m, g), charge(m)}].push_back(m);
  for (auto& [key, basis] : groups) {
    if (basis.size() > budget)
      throw BudgetExceeded("block " + block_name(key.first, key.second) + " has " + std::to_string(basis.size()) +
                           " monomials, budget " + std::to_string(budget));
    std::sort(basis.begin(), basis.end());
  }

  const State q = twist(n2_structure(space), tw).at("Q");
  std::vector<TruncatedBlock> out;
  for (const auto& [key, basis] : groups) {
    TruncatedBlock b;
    b.twist = tw;
    b.weight2 = key.first;
    b.charge = key.second;
    b.basis = basis;
    b.target_charge = key.second + charge_step(tw);
    auto tgt = groups.find({key.first, b.target_charge});
    const std::vector<Monomial> empty;
    const auto& target = tgt == groups.end() ? empty : tgt->second;
    b.q.assign(target.size(), std::vector<Rational>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const State img = nth_product(space, q, State::of(basis[j]), 0);
      for (const auto& [m, c] : img) {
        auto pos = std::lower_bound(target.begin(), target.end(), m);
        if (pos == target.end() || *pos != m)
          throw std::logic_error("Q0 left block " + block_name(key.first, key.second) + ": " + format_monomial(m));
        b.q[static_cast<std::size_t>(pos - target.begin())][j] = c;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<CohomologyEntry> cohomology_dims(const std::vector<TruncatedBlock>& blocks) {
  std::map<Key, std::size_t> ranks;
  for (const auto& b : blocks) ranks[{b.weight2, b.charge}] = rank(b.q);
  std::vector<CohomologyEntry> out;
  for (const auto& b : blocks) {
    const int source_charge = 2 * b.charge - b.target_charge;
    auto in = ranks.find({b.weight2, source_charge});
    const std::size_t rank_in = in == ranks.end() ? 0 : in->second;
    const std::size_t rank_out = ranks.at({b.weight2, b.charge});
    out.push_back({b.weight(), b.charge, b.basis.size(), b.basis.size() - rank_out - rank_in});
  }
  return out;
}

std::vector<CohomologyEntry> cohomology_dims(const SpaceSpec& space, Twist twist, int cutoff, std::size_t budget) {
  return cohomology_dims(brst_blocks(space, twist, cutoff, budget));
}

Report brst_square_check(const std::vector<TruncatedBlock>& blocks) {
  Report rep("Q0^2 = 0");
  std::map<Key, const TruncatedBlock*> by_key;
  for (const auto& b : blocks) by_key[{b.weight2, b.charge}] = &b;
  for (const auto& b : blocks) {
    auto next = by_key.find({b.weight2, b.target_charge});
    if (next == by_key.end()) continue;
    const Matrix& m1 = b.q;
    const Matrix& m2 = next->second->q;
    const auto after = by_key.find({b.weight2, next->second->target_charge});
    // (m2 m1) column j, as a state over the block two steps on.
    for (std::size_t j = 0; j < b.basis.size(); ++j) {
      State col;
      for (std::size_t i = 0; i < m2.size(); ++i) {
        Rational acc = 0;
        for (std::size_t k = 0; k < m1.size(); ++k) acc += m2[i][k] * m1[k][j];
        if (acc != 0) col.add(after->second->basis[i], acc);
      }
      rep.expect("Q0^2." + block_name(b.weight2, b.charge) + "." + std::to_string(j), std::move(col), {}, "paper");
    }
  }
  return rep;
}

Report cohomology_ring_check(const SpaceSpec& space, Twist tw, int cutoff, std::size_t budget) {
  Report rep("BRST cohomology ring, twist " + twist_name(tw));
  const Complex cx(space, tw, cutoff, budget);
  const Grading g = grading_of(tw);
  const Letter letter = tw == Twist::A ? Letter::Psi : Letter::Phi;
  const int r = space.rank();

  std::vector<std::vector<Mode>> subsets;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<Mode> modes;
    for (int j = 1; j <= r; ++j)
      if (mask & (1u << (j - 1))) modes.push_back(creation_mode(space, letter, j));
    subsets.push_back(std::move(modes));
  }
  const auto label = [](const std::vector<Mode>& modes) {
    std::string s = "[";
    for (const auto& m : modes) s += (s.size() > 1 ? " " : "") + format_mode(m);
    return s + "]";
  };
  const auto nf = [&](const State& v) {
    const Key k = key_of(space, v, g);
    return cx.normal_form(v, k.first, k.second);
  };

  for (const auto& s : subsets) {
    const State rep_s = make_state(space, s);
    const Key k = key_of(space, rep_s, g);
    if (k.first > 2 * cutoff) continue;
    rep.expect("closed." + label(s), cx.q0(rep_s), {}, "paper");
    rep.expect_true("nonzero." + label(s), !nf(rep_s).is_zero(), "paper", "class is not exact");
  }
  for (const auto& s : subsets) {
    for (const auto& t : subsets) {
      const State a = make_state(space, s);
      const State b = make_state(space, t);
      std::vector<Mode> both = s;
      both.insert(both.end(), t.begin(), t.end());
      const State expected = make_state(space, both);
      const State prod = normally_ordered(space, a, b);
      if (key_of(space, prod, g).first > 2 * cutoff) continue;
      rep.expect("product." + label(s) + "." + label(t), nf(prod), nf(expected), "paper");
      if (s.size() == 1 && t.size() == 1) {
        rep.expect("anticommute." + label(s) + "." + label(t), nf(prod), -nf(normally_ordered(space, b, a)),
                   "derived");
      }
    }
  }
  return rep;
}

Report trivial_representation_check(const SpaceSpec& space, Twist tw, int cutoff, std::size_t budget) {
  Report rep("T_n acts trivially on BRST cohomology, twist " + twist_name(tw));
  const Complex cx(space, tw, cutoff, budget);
  const State& t = cx.top.at("T");
  for (const auto& b : cx.blocks) {
    const auto kernel = nullspace(b.q, b.basis.size());
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      const auto& v = kernel[k];
      State closed;
      for (std::size_t j = 0; j < v.size(); ++j) closed.add(b.basis[j], v[j]);
      for (long n = -1; n <= 1; ++n) {
        const int w2 = b.weight2 - 2 * static_cast<int>(n);
        if (w2 > 2 * cutoff || w2 < 0) continue;
        const State tv = nth_product(space, t, closed, n + 1);
        rep.expect("T_" + std::to_string(n) + "." + block_name(b.weight2, b.charge) + ".v" + std::to_string(k),
                   cx.normal_form(tv, w2, b.charge),
                   {}, "paper");
      }
    }
  }
  return rep;
}

}  // namespace scva
