#pragma once

#include <memory>

#include "unichar/characters.hpp"
#include "unichar/orbits.hpp"

namespace unichar {

using DescPtr = std::shared_ptr<const SubgroupDescriptor>;

// ---------------------------------------------------------------------------
// D4 quotient (height bound 3, 10 coordinates). H = [U,U] = X5...X10,
// T = X1X2X4, and the curve pair x124/x567 attached to a central character
// (a8, a9, a10).
// ---------------------------------------------------------------------------
class D4Setup {
public:
  D4Setup(const GroupContext& ctx, FqElem a8, FqElem a9, FqElem a10);

  const GroupContext& ctx;
  FqElem a8, a9, a10, A;

  OneParamCurve x124_curve;  // t -> x1(a10 t) x2(a9 t) x4(a8 t)
  OneParamCurve x567_curve;  // t -> x5(a10 t) x6(a9 t) x7(a8 t)

  DescPtr H;      // X5 X6 X7 X8 X9 X10
  DescPtr T;      // X1 X2 X4
  DescPtr full;   // all ten coordinates
  DescPtr X3H;    // the abelian HX3
  DescPtr TX3;    // transversal of H in U
  DescPtr S124;   // the x124 curve subgroup
  DescPtr S567;

  // lambda^{a8,a9,a10}_{b5,b6,b7} on H
  LinearCharacter lambda(const FqElem& b5, const FqElem& b6,
                         const FqElem& b7) const;
  D4Invariants invariants(const LinearCharacter& lam) const;

  // F_124 = {1, x124(t0)} and F_3 = {1, x3((t0)_phi / A)}, t0 != 0
  std::vector<FqElem> f124_params(const FqElem& t0) const;  // {0, t0}
  FqElem f3_point(const FqElem& t0) const;                  // (t0)_phi / A
  FqElem a124(const FqElem& t0) const;  // least a with phi(a t0) != 1
  FqElem a3(const FqElem& t0) const;    // least a with phi(a f3_point) != 1

  DescPtr K1(const FqElem& t0) const;  // F124 * X3 * H
  DescPtr K2(const FqElem& t0) const;  // S124 * F3 * H

  LevelAction level_h(std::vector<UniElem> gens) const;    // state (b5,b6,b7)
  LevelAction level_hx3(std::vector<UniElem> gens) const;  // + b3
};

// ---------------------------------------------------------------------------
// E6 quotient (height bound 4, 21 coordinates), characteristic-3 tower.
// ---------------------------------------------------------------------------
class E6Setup {
public:
  explicit E6Setup(const GroupContext& ctx);

  const GroupContext& ctx;

  OneParamCurve s1t;  // t -> x2(t) x1(t) x3(-t) x5(t) x6(-t)
  OneParamCurve s2;   // s1(t, 2t^2, 2t^2)
  OneParamCurve r3, r2;

  DescPtr H;        // H4 H3 H2, thirteen coordinates
  DescPtr T;        // X2 X1 X3 X7 X5 X6 X11
  DescPtr X4H;      // the abelian HX4
  DescPtr TX4;      // transversal of H in U
  DescPtr S1;       // s1t * X7 * X11
  DescPtr S2;       // the s2 curve
  DescPtr HX4S1;
  DescPtr Xcompl;   // X1 X3 X5 X6, transversal of HX4S1 in U

  static const std::vector<int> kHRoots;  // 8,9,10,12..16,17..21

  // lambda with phi on the center and the given coefficients
  LinearCharacter lambda(const std::map<int, FqElem>& coeffs) const;

  // F_2 = {1, s2(+-c)} and F_4 = {1, x4(+-c_phi)} for B2 = c^2 != 0
  std::vector<FqElem> f2_params(const FqElem& c) const;
  std::vector<FqElem> f4_params(const FqElem& c) const;
  DescPtr HX4F2(const FqElem& c) const;
  DescPtr HF4S2(const FqElem& c) const;
  DescPtr HX4S2() const;

  LevelAction level_h(std::vector<UniElem> gens) const;     // 8 coefficients
  LevelAction level_h4h3(std::vector<UniElem> gens) const;  // b12..b16
  LevelAction level_h2(std::vector<UniElem> gens) const;    // b8,b9,b10
};

// ---------------------------------------------------------------------------
// E8 quotient (height bound 6, 43 coordinates), characteristic-5 tower.
// ---------------------------------------------------------------------------
class E8Setup {
public:
  explicit E8Setup(const GroupContext& ctx);

  const GroupContext& ctx;

  OneParamCurve l1, l2, l3, l4;
  OneParamCurve r5, r4, r3, r2;

  DescPtr H;         // 26 coordinates
  DescPtr T;         // T1 T2 T3 T4, sixteen coordinates
  DescPtr T2d, T3d, T4d;
  DescPtr S1, S2, S3, S4;
  DescPtr X5H;       // the abelian HX5
  DescPtr TX5;       // transversal of H in U

  static const std::vector<int> kHRoots;
  static const std::vector<int> kH5, kH4, kH3, kH2;

  LinearCharacter lambda(const std::map<int, FqElem>& coeffs) const;

  std::vector<FqElem> f4_params(const FqElem& c) const;  // {u c : u in F_5}
  std::vector<FqElem> f5_params(const FqElem& c) const;  // {v c_phi}
  DescPtr HX5F4(const FqElem& c) const;
  DescPtr HF5S4(const FqElem& c) const;
  DescPtr HX5S4() const;

  LevelAction level_h5(std::vector<UniElem> gens,
                       std::vector<std::pair<int, FqElem>> background = {}) const;
  LevelAction level_h4(std::vector<UniElem> gens,
                       std::vector<std::pair<int, FqElem>> background = {}) const;
  LevelAction level_h3(std::vector<UniElem> gens,
                       std::vector<std::pair<int, FqElem>> background = {}) const;
  LevelAction level_h2(std::vector<UniElem> gens,
                       std::vector<std::pair<int, FqElem>> background = {}) const;
};

// Coefficient map helper: character on a coordinate-product domain with the
// central roots at phi and everything else defaulted to zero.
LinearCharacter make_lambda(const GroupContext& ctx, DescPtr domain,
                            const std::map<int, FqElem>& coeffs);

}  // namespace unichar
