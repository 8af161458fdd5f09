#include "polystab/lattice.hpp"

namespace polystab {

OneParamSubgroup OneParamSubgroup::validated(IntVec coords) {
  if (coords.empty()) throw DimensionError("one-parameter subgroup: empty coordinate vector");
  Int s = 0;
  for (const Int& c : coords) s += c;
  if (s != 0)
    throw ValidationError("one-parameter subgroup: coordinates must sum to zero, got sum " +
                          s.str());
  return OneParamSubgroup(std::move(coords));
}

Int pairing(const OneParamSubgroup& lambda, const Character& chi) {
  return pairing_raw(lambda.coords(), chi);
}

Int pairing_raw(const IntVec& l, const IntVec& chi) {
  if (l.size() != chi.size())
    throw DimensionError("pairing: cocharacter and character live in different ranks");
  return dot(l, chi);
}

bool quotient_equal(const Character& a, const Character& b) {
  if (a.size() != b.size()) throw DimensionError("quotient_equal: rank mismatch");
  if (a.empty()) return true;
  Int d = a[0] - b[0];
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] - b[i] != d) return false;
  return true;
}

Character quotient_canonical(const Character& chi) {
  if (chi.empty()) return chi;
  Character out = chi;
  Int last = out.back();
  for (Int& c : out) c -= last;
  return out;
}

}  // namespace polystab
