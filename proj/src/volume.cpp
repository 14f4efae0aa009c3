#include "twistkit/volume.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "json.hpp"

namespace tk {

namespace {

template <class M>
CocycleBasisOf<M> chart_basis(const Surface& s, const CharacterOf<M>& chi, Gen chart) {
  return s.arc_letters() > 0 ? based_basis(s, chi, chart) : standard_basis(s, chi, chart);
}

} // namespace

template <class M>
FiberFormOf<M> omega_chart(const Surface& s, const CharacterOf<M>& chi, Gen chart) {
  CocycleBasisOf<M> b = chart_basis(s, chi, chart);
  FiberFormOf<M> out;
  out.chart = b.solved;
  out.ordered_basis = b.retained;
  if (s.closed()) {
    typename M::R one = M::one(chi.nv);
    out.coefficient = one / (one - M::to_ring(chi.on_letter(dual_letter(b.solved, s)), chi.nv));
  } else {
    // free case: no relator, no chart prefactor
    out.coefficient = M::one(chi.nv);
  }
  return out;
}

template <class M>
bool chart_consistency(const Surface& s, const CharacterOf<M>& chi, Gen c, Gen t) {
  CocycleBasisOf<M> bc = chart_basis(s, chi, c);
  CocycleBasisOf<M> bt = chart_basis(s, chi, t);
  size_t n = bc.retained.size();
  std::vector<std::vector<typename M::R>> m(n, std::vector<typename M::R>(n, M::zero(chi.nv)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      m[i][j] = evaluate_cocycle(bt.basis[j], Word{{bc.retained[i]}});
  typename M::R det = M::det(m, chi.nv);
  return omega_chart(s, chi, c).coefficient * det == omega_chart(s, chi, t).coefficient;
}

#define TK_VOLUME_INSTANTIATE(M)                                                        \
  template FiberFormOf<M> omega_chart<M>(const Surface&, const CharacterOf<M>&, Gen);   \
  template bool chart_consistency<M>(const Surface&, const CharacterOf<M>&, Gen, Gen);

TK_VOLUME_INSTANTIATE(SymMode)
TK_VOLUME_INSTANTIATE(NumMode)

namespace {

struct GenBlock {
  ZMat rows;
  ZRow rhs;
};

// one block per generator: (f_* - 1)^T v = -<., exponent>
GenBlock generator_block(const Surface& s, const MappingClass& f, const HVec& exp) {
  int hr = s.hrank();
  for (int k = hr; k < (int)exp.size(); ++k)
    if (exp[k] != 0) fail(ErrKind::InvalidConfig, "exponent class has arc components");
  ZMat m = homology_action(f, HMode::Absolute);
  GenBlock bl;
  for (int k = 0; k < hr; ++k) {
    ZRow row(hr);
    for (int l = 0; l < hr; ++l) row[l] = m[l][k] - (k == l ? 1 : 0);
    HVec ek = hzero(s);
    ek[k] = 1;
    bl.rows.push_back(std::move(row));
    bl.rhs.push_back(-symp_pair(ek, exp, s));
  }
  return bl;
}

bool subsystem_solvable(const std::vector<GenBlock>& blocks, const std::vector<size_t>& idx) {
  QMat a;
  QRow b;
  for (size_t i : idx) {
    for (const ZRow& r : blocks[i].rows) a.push_back(QRow(r.begin(), r.end()));
    for (const Int& x : blocks[i].rhs) b.push_back(Rat(x));
  }
  return q_solve(std::move(a), std::move(b)).has_value();
}

} // namespace

CoboundaryResult coboundary_solve(const Surface& s,
                                  const std::vector<std::pair<MappingClass, HVec>>& generators) {
  std::vector<GenBlock> blocks;
  for (const auto& [f, exp] : generators) blocks.push_back(generator_block(s, f, exp));

  QMat a;
  QRow b;
  for (const GenBlock& bl : blocks) {
    for (const ZRow& r : bl.rows) a.push_back(QRow(r.begin(), r.end()));
    for (const Int& x : bl.rhs) b.push_back(Rat(x));
  }
  if (a.empty()) {
    a.push_back(QRow(s.hrank(), 0));
    b.push_back(0);
  }

  CoboundaryResult out;
  if (auto v = q_solve(a, b)) {
    CoboundaryCertificate cert;
    cert.v = *v;
    cert.n = 1;
    for (const Rat& x : *v) cert.n = boost::multiprecision::lcm(cert.n, denominator(x));
    for (const Rat& x : *v) {
      Rat cleared = Rat(cert.n) * x;
      cert.integral_class.push_back(numerator(cleared));
    }
    out.certificate = std::move(cert);
    return out;
  }

  // shrink to a minimal inconsistent generator subset
  std::vector<size_t> witness(generators.size());
  for (size_t i = 0; i < witness.size(); ++i) witness[i] = i;
  for (size_t i = 0; i < witness.size();) {
    std::vector<size_t> trial = witness;
    trial.erase(trial.begin() + i);
    if (!subsystem_solvable(blocks, trial))
      witness = std::move(trial);
    else
      ++i;
  }

  ZMat za, zaug;
  for (size_t i : witness) {
    for (size_t r = 0; r < blocks[i].rows.size(); ++r) {
      za.push_back(blocks[i].rows[r]);
      ZRow aug = blocks[i].rows[r];
      aug.push_back(blocks[i].rhs[r]);
      zaug.push_back(std::move(aug));
    }
  }
  Obstruction ob;
  ob.witness = witness;
  ob.rank_rows = z_rank_bareiss(za);
  ob.rank_augmented = z_rank_bareiss(zaug);
  if (q_rank(z_to_q(za)) != ob.rank_rows || q_rank(z_to_q(zaug)) != ob.rank_augmented ||
      ob.rank_augmented <= ob.rank_rows)
    fail(ErrKind::Inconsistent, "obstruction witness failed independent rank verification");
  out.obstruction = std::move(ob);
  return out;
}

WindingClass n_framing_extract(const CoboundaryCertificate& cert, const WindingClass& w,
                               const std::vector<MappingClass>& generators) {
  const Surface& s = w.s;
  if ((int)cert.v.size() != s.hrank() || (int)cert.integral_class.size() != s.hrank())
    fail(ErrKind::InvalidConfig, "certificate size does not match the homology rank");
  if (cert.n <= 0) fail(ErrKind::InvalidConfig, "certificate level must be positive");
  for (int k = 0; k < s.hrank(); ++k)
    if (Rat(cert.integral_class[k]) != Rat(cert.n) * cert.v[k])
      fail(ErrKind::InvalidConfig, "certificate integral class does not clear v");
  WindingClass out = adjust_framing(w, cert.n, cert.integral_class);
  for (const MappingClass& f : generators)
    if (!framed_membership(out, f))
      fail(ErrKind::Inconsistent,
           f.label + " is not stabilized by the extracted framing");
  return out;
}

std::string certificate_json(const CoboundaryResult& r) {
  nlohmann::json j;
  if (r.certificate) {
    const CoboundaryCertificate& c = *r.certificate;
    j["v"] = nlohmann::json::array();
    for (const Rat& x : c.v) j["v"].push_back(x.str());
    j["N"] = c.n.convert_to<std::int64_t>();
    j["integral_class"] = nlohmann::json::array();
    for (const Int& x : c.integral_class)
      j["integral_class"].push_back(x.convert_to<std::int64_t>());
    j["validated"] = true;
  } else if (r.obstruction) {
    const Obstruction& o = *r.obstruction;
    j["obstruction"] = {{"witness", o.witness},
                        {"rank", o.rank_rows},
                        {"rank_augmented", o.rank_augmented}};
    j["validated"] = false;
  } else {
    fail(ErrKind::InvalidConfig, "empty coboundary result");
  }
  return j.dump(2);
}

} // namespace tk
