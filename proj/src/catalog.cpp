#include "hybridqec/catalog.hpp"

namespace hqec {
namespace {

HybridParams params(long long n, long long k, long long m, long long d, long long c) {
  HybridParams p;
  p.n = n;
  p.k = Rational(k);
  p.m = Rational(m);
  p.d = d;
  p.c = c;
  p.q = 2;
  return p;
}

const char* const kShaw6 = R"(# six-qubit subsystem code; fixing G^Z gives a [[6,1:1,3:2]] hybrid code
q 2
n 6
[stabilizer]
YIZXXY
ZXIIXZ
IZXXXX
ZZZIZI
[gauge_x]
IIIZIZ
[gauge_z]
IIIXII
# logical operators of the inner code: ZIXIXI, IZIIZZ
)";

const char* const kGottesman9x = R"(# nine-qubit hybrid code; the last quantum row has X appended on qubit 9
q 2
n 9
[quantum_stabilizer]
XXXXXXXXI
ZZZZZZZZI
XIXIZYZYI
XIYZXIYZI
XZIYIYXZX
[classical_stabilizer]
IIIIIIIIX
)";

const char* const kToric18 = R"(# 3x3 toric code with twelve stabilizers moved into the classical part
q 2
n 18
[quantum_stabilizer]
XXIXXIXXIXXXXXXIII
IXXIXXIXXIIIXXXXXX
ZZZZZZIIIZZIZZIZZI
IIIZZZZZZIZZIZZIZZ
[classical_stabilizer]
XIXIIIIIIXIIIIIXII
XXIIIIIIIIXIIIIIXI
IIIXIXIIIXIIXIIIII
IIIXXIIIIIXIIXIIII
XXIXXIXXIIIIIIIIII
IXXIXXIXXIIIIIIIII
ZIIZIIIIIZZIIIIIII
IZIIZIIIIIZZIIIIII
IIIZIIZIIIIIZZIIII
IIIIZIIZIIIIIZZIII
IIIIIIIIIZZIZZIZZI
IIIIIIIIIIZZIZZIZZ
)";

const char* const kGrassl12 = R"(# twelve-qubit hybrid code with one classical bit
q 2
n 12
[quantum_stabilizer]
XZIZIXIZZIIX
IYIZZYIIZZIX
IZXIZXIIIZZX
IZZYIYZIIZII
IIZZXXZZIZZI
IIZZIIYZZIYI
IZIZZZZYIZYI
IIIZIZIZXZXI
IZIZIIZIZXXI
ZZZZZZIIIIII
[classical_stabilizer]
IIIIIIIIIIIX
)";

const char* const kBaconShor9 = R"(# 3x3 Bacon-Shor subsystem code, qubit (row i, column j) at index 3i+j
q 2
n 9
[stabilizer]
ZZZZZZIII
IIIZZZZZZ
XXIXXIXXI
IXXIXXIXX
[gauge_x]
XIXIIIIII
IIIIIIXIX
IXXIIIIII
IIIIIIIXX
[gauge_z]
ZIIZIIIII
IIIZIIZII
IZIIZIIII
IIIIZIIZI
)";

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"shaw6", "6-qubit subsystem code, gauge-fixed to a hybrid code", kShaw6, params(6, 1, 1, 3, 2), 6},
      {"gottesman9x", "9-qubit hybrid code with one classical bit", kGottesman9x, params(9, 3, 1, 3, 3), 9},
      {"toric18", "toric code with twelve classical bits", kToric18, params(18, 2, 12, 3, 2), 3},
      {"grassl12", "12-qubit hybrid code with distance 5", kGrassl12, params(12, 1, 1, 5, 4), 12},
      {"baconshor9", "3x3 Bacon-Shor subsystem code", kBaconShor9, params(9, 1, 4, 3, 2), 9},
  };
  return entries;
}

const CatalogEntry* find_example(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace hqec
