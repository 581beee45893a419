#include "binform/verdict.hpp"

#include "binform/error.hpp"

namespace binform {

char to_char(CaseLabel c) { return static_cast<char>('A' + static_cast<int>(c)); }

CaseLabel classify_case(int l, int k) {
  if (l < 0 || k < 0 || (l == 0 && k == 0)) {
    throw Error(ErrorKind::UnclassifiableCounts,
                "no case for (l, k) = (" + std::to_string(l) + ", " + std::to_string(k) + ")");
  }
  if (l == 1 && k == 0) return CaseLabel::A;
  if (l == 2 && k == 0) return CaseLabel::B;
  if (l == 0) return k == 1 ? CaseLabel::C : CaseLabel::D;
  return CaseLabel::E;
}

CaseLabel classify_case(const FactorizationStructure& fs) { return classify_case(fs.l(), fs.k()); }

TheoremVerdict decide_theorem(const FactorizationStructure& fs) {
  TheoremVerdict v;
  v.label = classify_case(fs);
  v.p = fs.degree;
  v.l = fs.l();
  v.k = fs.k();
  v.stab1_ne_stab0 = v.label == CaseLabel::D;
  v.chain = v.stab1_ne_stab0 ? "StabId^inf = ... = StabId^1 != StabId^0"
                             : "StabId^inf = ... = StabId^1 = StabId^0";
  return v;
}

TheoremVerdict decide_theorem(const HomogeneousForm& f) {
  if (f.degree() == 0) throw Error(ErrorKind::DegreeZero, "the theorem needs degree at least 1");
  return decide_theorem(factor_form(f));
}

}  // namespace binform
