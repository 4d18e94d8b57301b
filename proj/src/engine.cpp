#include "repdim/engine.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "repdim/error.hpp"

namespace repdim {

namespace {

// Same representation, re-expressed over `a` (whose table matches m's algebra).
Module rewrap(const Algebra& a, const Module& m) {
  if (m.dim() == 0) return Module::zero(a);
  return Module::from_basis_action(a, m.basis_action());
}

std::vector<Vec> columns(const Matrix& m) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

// The pool constructions over one algebra.
std::vector<PoolEntry> constructions(const Algebra& b) {
  std::vector<PoolEntry> out;
  const ProjectiveSystem ps = projective_system(b);
  const Module reg = regular_module(b, Side::Left);
  const auto pows = radical_powers(b);
  const std::size_t ll = pows.size() - 1;
  for (std::size_t j = 0; j < ps.simples.size(); ++j) out.push_back({ps.simples[j], "S" + std::to_string(j)});
  for (std::size_t m = 1; m < ll; ++m) {
    out.push_back({quotient_module(reg, pows[m].basis).module, "A/rad^" + std::to_string(m)});
    out.push_back({submodule(reg, pows[m].basis).module, "rad^" + std::to_string(m)});
  }
  if (ps.radical.dim() == 0) return out;
  for (std::size_t j = 0; j < ps.simples.size(); ++j) {
    const Resolution r = projective_resolution(ps, ps.simples[j], std::max<std::size_t>(ll, 1));
    for (std::size_t i = 1; i < r.syzygies.size() && i <= ll; ++i)
      if (r.syzygies[i].dim() > 0)
        out.push_back({r.syzygies[i], "Omega^" + std::to_string(i) + "(S" + std::to_string(j) + ")"});
  }
  return out;
}

// Indecomposable modules up to isomorphism, interned to small integers.
class TypeRegistry {
 public:
  std::size_t intern(const Module& x) {
    for (std::size_t t = 0; t < reps_.size(); ++t)
      if (reps_[t].dim() == x.dim() && indecomposable_iso(reps_[t].rep(), x.rep())) return t;
    reps_.push_back(x);
    return reps_.size() - 1;
  }
  std::set<std::size_t> types_of(const Module& m) {
    std::set<std::size_t> out;
    if (m.dim() == 0) return out;
    for (const auto& s : m.decomposition().summands) out.insert(intern(s.module));
    return out;
  }
  const Module& rep(std::size_t t) const { return reps_[t]; }

 private:
  std::vector<Module> reps_;
};

struct Candidate {
  std::set<std::size_t> types;
  std::vector<std::string> labels;
};

// Exact value, or nullopt when unknown, infinite or over a cap.
std::optional<std::size_t> evaluate(const std::vector<Module>& pieces, const Algebra& a, std::size_t cap,
                                    std::size_t max_syzygy_dim) {
  try {
    const BasicEnd b = basic_end(pieces, a);
    const ProjectiveSystem ps = projective_system(b.end.algebra, b.idempotents, b.radical);
    const Dimension d = global_dimension(ps, cap, {false, std::min(max_syzygy_dim, 2 * b.end.algebra.dim())});
    if (d.kind == DimKind::Exact) return d.value;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
  }
  return std::nullopt;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

Module dual_regular(const Algebra& a) { return rewrap(a, dual_module(regular_module(a, Side::Right))); }

bool generator_cogenerator_check(const Module& m) {
  const Algebra& a = m.algebra();
  return is_in_add(regular_module(a, Side::Left), m).member && is_in_add(dual_regular(a), m).member;
}

bool is_self_injective(const Algebra& a) {
  return is_in_add(dual_regular(a), regular_module(a, Side::Left)).member;
}

Module loewy_generator_part(const Algebra& a) {
  const Module reg = regular_module(a, Side::Left);
  const auto pows = radical_powers(a);
  std::vector<Module> parts;
  for (std::size_t m = 1; m + 1 < pows.size(); ++m) parts.push_back(quotient_module(reg, pows[m].basis).module);
  return direct_sum(parts, a);
}

CandidatePool default_pool(const Algebra& a, const std::vector<PoolEntry>& extra) {
  std::vector<PoolEntry> raw;
  raw.push_back({Module::zero(a), "0"});
  for (auto& e : constructions(a)) raw.push_back(std::move(e));
  for (auto& e : constructions(opposite(a)))
    raw.push_back({rewrap(a, dual_module(e.module)), "D(" + e.label + ")"});
  for (const auto& e : extra) {
    require(same_algebra(e.module.algebra(), a), ErrorKind::Mismatch, "pool module over a different algebra");
    raw.push_back(e);
  }
  CandidatePool pool;
  for (auto& e : raw) {
    if (e.module.dim() > kMaxPoolModuleDim) continue;
    const bool seen = std::any_of(pool.entries.begin(), pool.entries.end(), [&](const PoolEntry& q) {
      return q.module.dim() == e.module.dim() && (e.module.dim() == 0 || is_isomorphic(q.module, e.module));
    });
    if (!seen) pool.entries.push_back(std::move(e));
  }
  return pool;
}

std::string to_string(LowerProvenance p) {
  switch (p) {
    case LowerProvenance::Semisimple: return "semisimple";
    case LowerProvenance::NoRepdimOne: return "no-repdim-1";
    case LowerProvenance::HigmanRepInfinite: return "higman-rep-infinite";
    case LowerProvenance::UserAssertion: return "user-assertion";
  }
  return "?";
}

LowerBound repdim_lower_bound(const Algebra& a, const std::optional<GroupContext>& group, bool assert_rep_infinite) {
  if (profile(a).semisimple) return {0, LowerProvenance::Semisimple, "radical is zero"};
  LowerBound out{2, LowerProvenance::NoRepdimOne, "radical is nonzero"};
  if (group) {
    if (!group_algebra(group->group, a.p()).same_table(a)) {
      out.detail += "; group context ignored, structure tables differ";
    } else {
      const HigmanVerdict h = higman_rep_type(group->group, a.p());
      if (h.type == RepType::Infinite)
        return {3, LowerProvenance::HigmanRepInfinite,
                "Sylow " + std::to_string(a.p()) + "-subgroup of order " + std::to_string(h.sylow.order()) +
                    " is not cyclic"};
      out.detail += "; Sylow subgroup cyclic, representation-finite";
    }
  }
  if (assert_rep_infinite) return {3, LowerProvenance::UserAssertion, "representation-infinite by assertion"};
  return out;
}

Dimension end_global_dimension(const Module& m, std::size_t cap, const ResolutionOptions& options) {
  const EndAlgebra e = end_algebra(m);
  require(e.algebra.dim() <= kMaxEndAlgebraDim, ErrorKind::CapExceeded, "endomorphism algebra over the cap");
  return global_dimension(e.algebra, cap, options);
}

BasicEnd basic_end(const std::vector<Module>& pieces, const Algebra& a) {
  // Basis: Hom(X_s, X_t) for every ordered pair, so f g is nonzero only when blocks chain.
  const std::size_t r = pieces.size();
  require(r > 0, ErrorKind::Invalid, "endomorphism algebra of the zero module");
  const std::uint32_t p = a.p();
  std::vector<std::size_t> offset(r + 1, 0);
  for (std::size_t s = 0; s < r; ++s) offset[s + 1] = offset[s] + pieces[s].dim();
  const std::size_t n = offset[r];
  struct Block {
    std::vector<Matrix> basis;  // dim X_t x dim X_s
    std::size_t start = 0;      // first global index
    std::vector<std::size_t> rows;  // entries determining the coordinates
    Matrix solve;                   // coordinates from those entries
  };
  std::vector<Block> blocks(r * r);  // index s * r + t
  std::size_t k = 0;
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t) {
      Block& b = blocks[s * r + t];
      b.basis = hom_basis(pieces[s].rep(), pieces[t].rep());
      b.start = k;
      k += b.basis.size();
      require(k <= kMaxEndAlgebraDim && k <= kMaxAlgebraDim, ErrorKind::CapExceeded,
              "endomorphism algebra over the cap");
      if (b.basis.empty()) continue;
      std::vector<Vec> flat;
      for (const auto& f : b.basis) flat.push_back(f.entries());
      const Matrix cols = Matrix::from_columns(flat, flat[0].size(), p);
      b.rows = rref(cols.transpose()).pivots;
      Matrix sub(b.rows.size(), b.basis.size(), p);
      for (std::size_t i = 0; i < b.rows.size(); ++i)
        for (std::size_t j = 0; j < b.basis.size(); ++j) sub(i, j) = cols(b.rows[i], j);
      b.solve = *inverse(sub);
    }
  std::vector<Elem> table(k * k * k, 0);
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t) {
      const Block& f = blocks[s * r + t];  // X_s -> X_t
      for (std::size_t u = 0; u < r; ++u) {
        const Block& g = blocks[u * r + s];  // X_u -> X_s
        const Block& h = blocks[u * r + t];  // product X_u -> X_t
        for (std::size_t i = 0; i < f.basis.size(); ++i)
          for (std::size_t j = 0; j < g.basis.size(); ++j) {
            const Matrix prod = f.basis[i] * g.basis[j];
            Vec picked(h.rows.size());
            for (std::size_t q = 0; q < h.rows.size(); ++q) picked[q] = prod.entries()[h.rows[q]];
            const Vec c = h.solve * picked;
            const std::size_t base = ((f.start + i) * k + g.start + j) * k + h.start;
            std::copy(c.begin(), c.end(), table.begin() + static_cast<long>(base));
          }
      }
    }
  BasicEnd out;
  Vec unit(k, 0);
  std::vector<Vec> rad;
  for (std::size_t s = 0; s < r; ++s) {
    const Block& d = blocks[s * r + s];
    const Matrix id = Matrix::identity(pieces[s].dim(), p);
    Vec picked(d.rows.size());
    for (std::size_t q = 0; q < d.rows.size(); ++q) picked[q] = id.entries()[d.rows[q]];
    const Vec c = d.solve * picked;
    Vec e(k, 0);
    std::copy(c.begin(), c.end(), e.begin() + static_cast<long>(d.start));
    unit = vec_add(a.field(), unit, e);
    out.idempotents.push_back(std::move(e));
    // Diagonal blocks contribute rad End(X_s); the same Hom basis underlies end_algebra(X_s).
    for (const auto& v : radical(end_algebra(pieces[s]).algebra).basis) {
      Vec w(k, 0);
      std::copy(v.begin(), v.end(), w.begin() + static_cast<long>(d.start));
      rad.push_back(std::move(w));
    }
    for (std::size_t t = 0; t < r; ++t)
      if (t != s)
        for (std::size_t i = 0; i < blocks[s * r + t].basis.size(); ++i)
          rad.push_back(unit_vector(k, blocks[s * r + t].start + i));
  }
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      for (const auto& f : blocks[s * r + t].basis) {
        Matrix m(n, n, p);
        for (std::size_t i = 0; i < f.rows(); ++i)
          for (std::size_t j = 0; j < f.cols(); ++j) m(offset[t] + i, offset[s] + j) = f(i, j);
        out.end.maps.push_back(std::move(m));
      }
  out.end.algebra = Algebra(p, k, std::move(table), std::move(unit));
  out.radical = Ideal{k, p, span_basis(rad, k, p)};
  return out;
}

Module basic_module(const std::vector<Module>& parts, const Algebra& a) {
  TypeRegistry reg;
  std::set<std::size_t> types;
  for (const auto& m : parts) types.merge(reg.types_of(m));
  std::vector<Module> pieces;
  for (auto t : types) pieces.push_back(reg.rep(t));
  return direct_sum(pieces, a);
}

std::optional<UpperBound> repdim_upper_bound(const Algebra& a, const CandidatePool& pool,
                                             const SearchOptions& options) {
  TypeRegistry reg;
  std::set<std::size_t> base = reg.types_of(regular_module(a, Side::Left));
  base.merge(reg.types_of(dual_regular(a)));
  std::vector<std::set<std::size_t>> entry_types;
  for (const auto& e : pool.entries) entry_types.push_back(reg.types_of(e.module));

  // Candidates in evaluation order, deduplicated by type set.
  std::vector<Candidate> cands;
  std::set<std::set<std::size_t>> keys;
  auto push = [&](std::set<std::size_t> t, std::vector<std::string> labels) {
    t.insert(base.begin(), base.end());
    if (keys.insert(t).second) cands.push_back({std::move(t), std::move(labels)});
  };
  {
    std::vector<std::string> labels;
    const auto pows = radical_powers(a);
    for (std::size_t m = 1; m + 1 < pows.size(); ++m) labels.push_back("A/rad^" + std::to_string(m));
    push(reg.types_of(loewy_generator_part(a)), labels);
  }
  const std::size_t n = pool.entries.size();
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start, std::size_t left) -> void {
    if (left == 0) {
      std::set<std::size_t> t;
      std::vector<std::string> labels;
      for (auto i : idx) {
        t.insert(entry_types[i].begin(), entry_types[i].end());
        labels.push_back(pool.entries[i].label);
      }
      push(t, labels);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1, left - 1);
      idx.pop_back();
    }
  };
  for (std::size_t k = 1; k <= std::min(options.max_subset, n); ++k) rec(rec, 0, k);

  auto pieces_of = [&](const Candidate& c) {
    std::vector<Module> pieces;
    for (auto t : c.types) pieces.push_back(reg.rep(t));
    return pieces;
  };

  std::optional<UpperBound> best;
  std::size_t evaluated = 0, skipped = 0;
  const std::size_t jobs = std::max<std::size_t>(options.jobs, 1);
  auto done = [&] { return best && (best->bound == 0 || (options.stop_at && best->bound <= *options.stop_at)); };
  auto running_cap = [&] { return best ? std::min(options.gldim_cap, best->bound) : options.gldim_cap; };
  for (std::size_t start = 0; start < cands.size() && !done(); start += jobs) {
    const std::size_t cap = running_cap();
    const std::size_t end = std::min(cands.size(), start + jobs);
    std::vector<std::vector<Module>> pieces;
    for (std::size_t i = start; i < end; ++i) pieces.push_back(pieces_of(cands[i]));
    std::vector<std::optional<std::size_t>> values(end - start);
    if (jobs == 1) {
      values[0] = evaluate(pieces[0], a, cap, options.max_syzygy_dim);
    } else {
      std::vector<std::future<std::optional<std::size_t>>> fut;
      for (const auto& pc : pieces)
        fut.push_back(std::async(std::launch::async, evaluate, std::cref(pc), std::cref(a), cap, options.max_syzygy_dim));
      for (std::size_t i = 0; i < fut.size(); ++i) values[i] = fut[i].get();
    }
    // Combined in order as if evaluated one at a time, so counts do not depend on jobs.
    for (std::size_t i = 0; i < values.size() && !done(); ++i) {
      ++evaluated;
      if (!values[i] || *values[i] > running_cap()) {
        ++skipped;
        continue;
      }
      const Module m = direct_sum(pieces[i], a);
      const bool better = !best || *values[i] < best->bound ||
                          (*values[i] == best->bound && m.dim() < best->witness.dim());
      if (better) best = UpperBound{*values[i], m, cands[start + i].labels, 0, 0};
    }
  }
  if (best) {
    best->candidates_evaluated = evaluated;
    best->candidates_skipped = skipped;
  }
  return best;
}

RepdimReport repdim_report(const Algebra& a, const RepdimOptions& options) {
  RepdimReport r;
  r.algebra = a;
  const AlgebraProfile prof = profile(a);
  r.loewy_length = prof.loewy_length;
  r.lower = repdim_lower_bound(a, options.group, options.assert_rep_infinite);
  r.transcript.push_back("lower bound " + std::to_string(r.lower.bound) + " (" + to_string(r.lower.provenance) +
                         "): " + r.lower.detail);
  r.self_injective = is_self_injective(a);
  const CandidatePool pool = default_pool(a, options.pool_extra);
  r.transcript.push_back("pool of " + std::to_string(pool.entries.size()) + " modules");
  SearchOptions search = options.search;
  search.stop_at = r.lower.bound;
  r.upper = repdim_upper_bound(a, pool, search);
  if (!r.upper) {
    r.transcript.push_back("no candidate reached an exact global dimension");
    return r;
  }
  const UpperBound& u = *r.upper;
  r.transcript.push_back("upper bound " + std::to_string(u.bound) + " with X = " +
                         (u.x_labels.empty() ? std::string("0") : join(u.x_labels, " + ")) + " after " +
                         std::to_string(u.candidates_evaluated) + " candidates (" +
                         std::to_string(u.candidates_skipped) + " skipped)");
  const Dimension d = end_global_dimension(u.witness, u.bound);
  r.witness_verified = generator_cogenerator_check(u.witness) && d.kind == DimKind::Exact && d.value == u.bound;
  r.transcript.push_back(std::string("witness of dimension ") + std::to_string(u.witness.dim()) +
                         (r.witness_verified ? " re-verified" : " failed re-verification"));
  if (r.self_injective) {
    r.loewy_bound_holds = u.bound <= r.loewy_length;
    r.transcript.push_back("self-injective, Loewy length " + std::to_string(r.loewy_length) +
                           (*r.loewy_bound_holds ? ", bound holds" : ", bound violated"));
  }
  r.exact = r.witness_verified && u.bound == r.lower.bound;
  return r;
}

CrosscheckResult approximation_crosscheck(const Module& m, const Module& y, std::size_t gldim) {
  require(same_algebra(m.algebra(), y.algebra()), ErrorKind::Mismatch, "modules over different algebras");
  const std::uint32_t p = m.p();
  const Decomposition& dec = m.decomposition();
  const std::size_t steps = gldim >= 2 ? gldim - 2 : 0;
  CrosscheckResult out;
  Module k = y;
  for (std::size_t step = 0; step < steps && k.dim() > 0; ++step) {
    // Greedy right add(M)-approximation by indecomposable summands of M.
    const auto target = hom_space(m, k);
    EchelonSpace reached(k.dim() * m.dim(), p);
    std::vector<Module> pieces;
    std::vector<Matrix> maps;
    for (const auto& s : dec.summands) {
      const auto to_x = hom_space(m, s.module);
      for (const auto& g : hom_space(s.module, k)) {
        if (reached.dim() == target.size()) break;
        bool grew = false;
        for (const auto& psi : to_x) grew = reached.insert((g * psi).entries()) || grew;
        if (grew) {
          pieces.push_back(s.module);
          maps.push_back(g);
        }
      }
    }
    if (reached.dim() != target.size()) {
      out.detail = "approximation search did not exhaust Hom(M, K) at step " + std::to_string(step);
      return out;
    }
    Matrix eval = maps.empty() ? Matrix(k.dim(), 0, p) : maps[0];
    for (std::size_t i = 1; i < maps.size(); ++i) eval = hstack(eval, maps[i]);
    if (rank(eval) != k.dim()) {
      out.detail = "approximation is not onto at step " + std::to_string(step);
      return out;
    }
    const Module src = direct_sum(pieces, m.algebra());
    const SubmoduleResult next = kernel_module(src, eval);
    const std::size_t lhs = hom_space(m, src).size();
    const std::size_t rhs = hom_space(m, next.module).size() + target.size();
    if (lhs != rhs) {
      out.detail = "Hom(M, -) not exact at step " + std::to_string(step) + ": " + std::to_string(lhs) +
                   " != " + std::to_string(rhs);
      return out;
    }
    k = next.module;
    ++out.steps;
  }
  if (k.dim() > 0 && !is_in_add(k, m).member) {
    out.detail = "last kernel of dimension " + std::to_string(k.dim()) + " is not in add(M)";
    return out;
  }
  out.ok = true;
  out.detail = "exact after " + std::to_string(out.steps) + " approximations";
  return out;
}

Module random_module(const Algebra& a, std::mt19937_64& rng, std::size_t max_dim) {
  const Module sources[2] = {regular_module(a, Side::Left), dual_regular(a)};
  std::uniform_int_distribution<Elem> coef(0, a.p() - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Module& src = sources[rng() % 2];
    std::vector<Vec> vs(1 + rng() % 2, Vec(src.dim()));
    for (auto& v : vs)
      for (auto& x : v) x = coef(rng);
    const SubmoduleResult sub = submodule_generated(src, vs);
    Module cand = (rng() % 2 == 0) ? sub.module : quotient_module(src, columns(sub.inclusion)).module;
    if (cand.dim() >= 1 && cand.dim() <= max_dim) return cand;
  }
  return projective_system(a).simples.front();
}

std::string to_string(CorollaryVerdict v) {
  switch (v) {
    case CorollaryVerdict::Pass: return "pass";
    case CorollaryVerdict::Fail: return "fail";
    case CorollaryVerdict::NotApplicable: return "not-applicable";
    case CorollaryVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CorollaryReport verify_group_corollary(const FiniteGroup& g, const Subgroup& h, std::uint32_t p,
                                       const RepdimOptions& options) {
  require(is_subgroup(g, h), ErrorKind::Invalid, "not a subgroup");
  CorollaryReport out;
  out.subgroup_order = h.order();
  out.chain_status = normalizer_chain(g, h).status;
  const std::size_t idx = index(g, h);
  if (idx % p == 0) {
    out.verdict = CorollaryVerdict::NotApplicable;
    out.detail = "index " + std::to_string(idx) + " is divisible by " + std::to_string(p);
    return out;
  }
  RepdimOptions go = options, ho = options;
  go.group = GroupContext{g};
  const FiniteGroup hg = subgroup_as_group(g, h);
  ho.group = GroupContext{hg};
  go.pool_extra.clear();
  ho.pool_extra.clear();
  out.group_report = repdim_report(group_algebra(g, p), go);
  out.subgroup_report = repdim_report(group_algebra(hg, p), ho);
  const auto& gr = out.group_report;
  const auto& hr = out.subgroup_report;
  const std::size_t g_hi = gr.upper ? gr.upper->bound : SIZE_MAX;
  const std::size_t h_hi = hr.upper ? hr.upper->bound : SIZE_MAX;
  std::ostringstream os;
  os << "G: [" << gr.lower.bound << ", " << (gr.upper ? std::to_string(g_hi) : "?") << "], H: ["
     << hr.lower.bound << ", " << (hr.upper ? std::to_string(h_hi) : "?") << "], |H| = " << h.order();
  out.detail = os.str();
  // The two intervals must overlap and the common value is at most |H|.
  const std::size_t lo = std::max(gr.lower.bound, hr.lower.bound);
  const std::size_t hi = std::min(g_hi, h_hi);
  if (lo > hi || lo > h.order()) {
    out.verdict = CorollaryVerdict::Fail;
  } else if (gr.exact && hr.exact) {
    out.verdict = CorollaryVerdict::Pass;
  } else {
    out.verdict = CorollaryVerdict::Inconclusive;
  }
  return out;
}

}  // namespace repdim
