#include "sclab/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace sclab {

namespace {

double pairing(const DictionaryEntry& e, const PhaseSpaceField& a,
               const PhaseSpaceField& b) {
  const std::size_t nq = a.qs.size(), np = a.ps.size();
  std::vector<double> fq(nq), fp(np);
  for (std::size_t i = 0; i < nq; ++i) fq[i] = e.fq.value(a.qs[i]);
  for (std::size_t j = 0; j < np; ++j) fp[j] = e.fp.value(a.ps[j]);
  double acc = 0.0;
  for (std::size_t i = 0; i < nq; ++i) {
    if (fq[i] == 0.0) continue;
    double row = 0.0;
    const double* va = &a.v[i * np];
    const double* vb = &b.v[i * np];
    for (std::size_t j = 0; j < np; ++j) row += fp[j] * (va[j] - vb[j]);
    acc += fq[i] * row;
  }
  return acc * a.cell();
}

}  // namespace

double entry_pairing(const DictionaryEntry& e, const PhaseSpaceField& a,
                     const PhaseSpaceField& b) {
  if (!a.same_lattice(b)) throw std::invalid_argument("entry_pairing: lattice mismatch");
  return pairing(e, a, b);
}

double weak_delta(const PhaseSpaceField& w1, const PhaseSpaceField& w2,
                  const TestDictionary& dict) {
  if (!w1.same_lattice(w2)) throw std::invalid_argument("weak_delta: lattice mismatch");
  double best = 0.0;
  for (const auto& e : dict.entries) {
    if (!(e.sup_max > 0.0)) continue;
    best = std::max(best, std::abs(pairing(e, w1, w2)) / e.sup_max);
  }
  return best;
}

double weak_d_lower(const PhaseSpaceField& ha, const PhaseSpaceField& hb,
                    const TestDictionary& dict) {
  if (!ha.same_lattice(hb))
    throw std::invalid_argument("weak_d_lower: lattice mismatch");
  if (ha.tag != PhaseSpaceField::Tag::husimi || hb.tag != PhaseSpaceField::Tag::husimi)
    throw std::invalid_argument("weak_d_lower: expects Husimi fields");
  double best = 0.0;
  for (const auto& e : dict.entries) {
    if (!std::isfinite(e.l1_max) || !(e.l1_max > 0.0)) continue;  // d-inadmissible
    best = std::max(best, std::abs(pairing(e, ha, hb)) / e.l1_max);
  }
  return best;
}

double weak_d_lower(const WaveFunction& a, const WaveFunction& b,
                    const TestDictionary& dict) {
  return weak_d_lower(husimi(a), husimi(b), dict);
}

}  // namespace sclab
