#pragma once

#include <string>
#include <string_view>

#include "binform/polyring.hpp"
#include "binform/realfactor.hpp"

namespace binform {

// (l, k) = (distinct real linear factors, distinct definite quadratic factors):
// A = (1,0), B = (2,0), C = (0,1), D = (0, k>=2), E = (l>=1, l+2k>=3).
enum class CaseLabel { A, B, C, D, E };

char to_char(CaseLabel c);

CaseLabel classify_case(int l, int k);
CaseLabel classify_case(const FactorizationStructure& fs);

struct TheoremVerdict {
  CaseLabel label = CaseLabel::A;
  int p = 0;
  int l = 0;
  int k = 0;
  bool stab1_ne_stab0 = false;
  std::string chain;
};

TheoremVerdict decide_theorem(const HomogeneousForm& f);
TheoremVerdict decide_theorem(const FactorizationStructure& fs);

}  // namespace binform
