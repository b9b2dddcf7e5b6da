#pragma once

#include "sclab/dictionary.hpp"
#include "sclab/phasespace.hpp"

namespace sclab {

/// Certified lower estimate of the weak distance delta between two Wigner
/// fields: max over sup-normalized dictionary entries of the pairing
/// |sum f (W1 - W2) dq dp|.
double weak_delta(const PhaseSpaceField& w1, const PhaseSpaceField& w2,
                  const TestDictionary& dict);

/// Dictionary estimate of the operator weak distance d via the anti-Wick
/// test family: max over L1-normalized entries of the Husimi pairing
/// |sum f (H_psi - H_phi) dq dp|.
double weak_d_lower(const PhaseSpaceField& husimi_a, const PhaseSpaceField& husimi_b,
                    const TestDictionary& dict);
double weak_d_lower(const WaveFunction& a, const WaveFunction& b,
                    const TestDictionary& dict);

/// Pairing of one (unnormalized) entry against a field difference; exposed
/// for the Toeplitz-duality cross checks.
double entry_pairing(const DictionaryEntry& e, const PhaseSpaceField& a,
                     const PhaseSpaceField& b);

}  // namespace sclab
