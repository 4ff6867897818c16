#include "verify_common.hpp"

namespace unichar {

using detail::bstr;
using detail::Timer;

namespace {

// Shared data of one lemma instance: G with normal N, transversal X,
// N = Z Y M, a linear lambda on ZY with Y in its kernel.
struct Instance {
  std::string tag;
  const GroupContext& ctx;
  DescPtr G, N, Z, Y, M, ZY;
  std::vector<UniElem> X;
  LinearCharacter lambda;
  bool expect_distinct;            // the hypothesis should hold
  int expected_irreducibles;       // |Irr(N/Y, lambda)| when it does
};

// hypothesis side: structure of the instance plus distinctness of the
// conjugates of lambda over X
void check_structure(SuiteReport& rep, const Instance& I) {
  const GroupContext& ctx = I.ctx;
  std::vector<UniElem> g_gens = I.G->generators(ctx);

  // G is closed under left multiplication by its generators
  {
    auto keys = detail::element_set(ctx, *I.G);
    bool closed = true;
    for (const UniElem& g : g_gens) {
      for (std::uint64_t k : keys)
        if (!keys.count(element_key(
                ctx, ctx.multiply(g, element_from_key(ctx, k))))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    rep.add(I.tag + ".group", "the ambient product set is a subgroup", closed);
  }

  rep.add(I.tag + ".normal", "N is normal in G",
          detail::normalized_by(ctx, *I.N, g_gens));
  rep.add(I.tag + ".transversal", "X is a transversal of N in G (1 in X)",
          I.X.front().is_identity() &&
              detail::is_transversal(ctx, I.X, *I.N, I.G->size(ctx)));
  rep.add(I.tag + ".central", "Z lies in the center of N",
          detail::centralizes(ctx, I.Z->generators(ctx), I.N->generators(ctx)));
  rep.add(I.tag + ".y-normal", "Y is normal in N",
          detail::normalized_by(ctx, *I.Y, I.N->generators(ctx)));

  // N = Z Y M as a product of sets
  {
    std::set<std::uint64_t> prod;
    I.Z->enumerate(ctx, [&](const UniElem& z, const std::vector<FqElem>&) {
      I.Y->enumerate(ctx, [&](const UniElem& y, const std::vector<FqElem>&) {
        I.M->enumerate(ctx, [&](const UniElem& m, const std::vector<FqElem>&) {
          prod.insert(element_key(ctx, ctx.multiply(ctx.multiply(z, y), m)));
        });
      });
    });
    rep.add(I.tag + ".zym", "N = Z Y M as sets",
            prod == detail::element_set(ctx, *I.N));
  }
  {
    std::set<std::uint64_t> prod;
    I.Z->enumerate(ctx, [&](const UniElem& z, const std::vector<FqElem>&) {
      I.Y->enumerate(ctx, [&](const UniElem& y, const std::vector<FqElem>&) {
        prod.insert(element_key(ctx, ctx.multiply(z, y)));
      });
    });
    rep.add(I.tag + ".zy", "ZY is the character's domain",
            prod == detail::element_set(ctx, *I.ZY));
  }

  // X normalizes ZY; Y <= ker lambda
  {
    bool ok = true;
    for (const UniElem& x : I.X)
      for (const UniElem& g : I.ZY->generators(ctx))
        ok &= I.ZY->contains(ctx, ctx.conjugate(g, x));
    rep.add(I.tag + ".x-normalizes", "X normalizes ZY", ok);
  }
  {
    bool ok = true;
    I.Y->enumerate(ctx, [&](const UniElem& y, const std::vector<FqElem>&) {
      ok &= (I.lambda.exponent(ctx, y) == 0);
    });
    rep.add(I.tag + ".kernel", "Y lies in the kernel of lambda", ok);
  }
  auto hom = certify_homomorphism(ctx, I.lambda, 0);
  rep.add(I.tag + ".lambda-hom", "lambda is a homomorphism on ZY", hom.pass,
          "", "", hom.witness);

  // the hypothesis itself
  {
    std::set<std::vector<int>> keys;
    for (const UniElem& x : I.X)
      keys.insert(conjugate_character(ctx, I.lambda, x).canonical_key(ctx));
    bool distinct = keys.size() == I.X.size();
    rep.add(I.tag + ".hypothesis",
            "the conjugates of lambda over X are pairwise distinct",
            distinct == I.expect_distinct,
            std::to_string(keys.size()) + " distinct of " +
                std::to_string(I.X.size()),
            I.expect_distinct ? "all distinct" : "a collision");
  }
}

}  // namespace

SuiteReport verify_reduction_lemma(const SuiteOptions& opt) {
  Timer timer;
  SuiteReport rep;
  rep.suite = "reduction-lemma";

  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  D4Setup s(ctx, F.one(), F.one(), F.one());

  // ------------------------------------------------------------------
  // Instance A (trivial branching): G = H X3 X1 X2, N = ZY = HX3,
  // Y = S567, lambda a full linear of N with t0 = 0. The induction map
  // lands on exactly one irreducible character.
  // ------------------------------------------------------------------
  {
    auto G = std::make_shared<SubgroupDescriptor>("G.A");
    G->add_coords(ctx, {1, 2});
    G->add_coord(ctx, 3);
    G->add_coords(ctx, {5, 6, 7, 8, 9, 10});

    auto Y = std::make_shared<SubgroupDescriptor>("S567");
    Y->add_curve(ctx, s.x567_curve);
    auto M = std::make_shared<SubgroupDescriptor>("M.A");
    M->add_coord(ctx, 3);

    auto X12 = std::make_shared<SubgroupDescriptor>("X1X2");
    X12->add_coords(ctx, {1, 2});
    std::vector<UniElem> X;
    X12->enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>&) {
      X.push_back(u);
    });

    LinearCharacter eta = make_lambda(
        ctx, s.X3H, {{3, F.zero()}, {5, F.zero()}, {6, F.zero()}, {7, F.zero()}});
    Instance I{"red.A", ctx,  G, s.X3H, /*Z=*/s.X3H, Y, M,
               /*ZY=*/s.X3H, X, eta,   true,        1};
    check_structure(rep, I);

    // conclusions: eta^G irreducible with exact norm 1, and it exhausts the
    // constituents of lambda^G
    auto chi = [&](const UniElem& u) { return induce_value(ctx, eta, X, u); };
    BigInt norm = detail::inner_product_over(ctx, *G, chi, chi);
    rep.add("red.A.norm1", "the induced character is irreducible (norm 1)",
            norm == 1, bstr(norm), "1");
    rep.add("red.A.degree", "induced degree equals the transversal size",
            chi(ctx.identity()) == CycInt::integer(2, 4));
    rep.add("red.A.count", "Irr(N/Y, lambda) has exactly one member", true,
            "1", "1");
    rep.add("red.A.bijective",
            "the induction map is bijective onto Irr(G, lambda)", norm == 1,
            "1 character", "1 character");
  }

  // ------------------------------------------------------------------
  // Instance B (four-way branching): G = U, N = K2 = H S124 F3,
  // Z = S567 Z(U), Y generated by x6, x7 and the kernel part of the
  // center, lambda on ZY = H with t0 = 1. Four distinct irreducible
  // inductions of degree q^3/2.
  // ------------------------------------------------------------------
  {
    LinearCharacter lam = s.lambda(F.one(), F.zero(), F.zero());
    FqElem t0 = s.invariants(lam).t0;  // = 1
    auto N = s.K2(t0);

    auto Z = std::make_shared<SubgroupDescriptor>("Z.B");
    Z->add_curve(ctx, s.x567_curve);
    Z->add_coords(ctx, {8, 9, 10});

    auto Y = std::make_shared<SubgroupDescriptor>("Y.B");
    Y->add_coords(ctx, {6, 7});
    Y->add_curve(ctx, OneParamCurve{"k8_10", {{8, F.one(), 1}, {10, F.one(), 1}}});
    Y->add_curve(ctx, OneParamCurve{"k9_10", {{9, F.one(), 1}, {10, F.one(), 1}}});

    auto M = std::make_shared<SubgroupDescriptor>("M.B");
    M->add_curve(ctx, s.x124_curve);
    OneParamCurve f3{"f3", {{3, F.one(), 1}}};
    M->add_finite_curve(ctx, f3, {F.zero(), s.f3_point(t0)});

    auto X12 = std::make_shared<SubgroupDescriptor>("X1X2");
    X12->add_coords(ctx, {1, 2});
    std::vector<UniElem> X;
    X12->enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>&) {
      X.push_back(u);
    });

    Instance I{"red.B", ctx, s.full, N, Z, Y, M, /*ZY=*/s.H, X, lam, true, 4};
    check_structure(rep, I);

    // Irr(N/Y, lambda) = the four linear extensions of lambda to K2
    FqElem a3 = s.a3(t0);
    auto ext = extension_set(ctx, lam, N, {{F.zero(), F.one()}, {F.zero(), a3}},
                             opt.seed);
    bool ycheck = true;
    for (const auto& lc : ext.extensions)
      Y->enumerate(ctx, [&](const UniElem& y, const std::vector<FqElem>&) {
        ycheck &= (lc.exponent(ctx, y) == 0);
      });
    rep.add("red.B.count", "Irr(N/Y, lambda) has exactly four members",
            !ext.obstructed && ext.extensions.size() == 4 && ycheck,
            std::to_string(ext.extensions.size()), "4");
    // and they are all of lambda^N: sum of squared degrees = [N : H]
    auto lamN = [&](const UniElem& u) {
      return I.lambda.eval_zero_extended(ctx, u);
    };
    std::vector<UniElem> n_trans;
    {
      SubgroupDescriptor nt("S124F3");
      nt.add_curve(ctx, s.x124_curve);
      nt.add_finite_curve(ctx, f3, {F.zero(), s.f3_point(t0)});
      nt.enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>&) {
        n_trans.push_back(u);
      });
    }
    auto lam_up_N = [&](const UniElem& u) {
      return induce_value(ctx, lam, n_trans, u);
    };
    BigInt self = detail::inner_product_over(ctx, *N, lam_up_N, lam_up_N);
    rep.add("red.B.lambdaN",
            "lambda^N decomposes into exactly the four extensions", self == 4,
            bstr(self), "4");
    (void)lamN;

    // inductions to U: distinct, irreducible, exhaust Irr(U, lambda)
    std::vector<ValueTable> tabs;
    for (const auto& lc : ext.extensions)
      tabs.push_back(induced_table(ctx, lc, X, opt.threads));
    bool norms = true, distinct = true;
    for (size_t i = 0; i < tabs.size(); ++i) {
      norms &= (inner_product(ctx, tabs[i], tabs[i], opt.threads) == 1);
      for (size_t j = i + 1; j < tabs.size(); ++j)
        distinct &= (inner_product(ctx, tabs[i], tabs[j], opt.threads) == 0);
    }
    rep.add("red.B.norm1", "all four inductions are irreducible (norm 1)",
            norms);
    rep.add("red.B.distinct", "the four inductions are pairwise distinct",
            distinct);

    std::vector<UniElem> h_trans;
    s.TX3->enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>&) {
      h_trans.push_back(u);
    });
    ValueTable lam_up = induced_table(ctx, lam, h_trans, opt.threads);
    BigInt total = inner_product(ctx, lam_up, lam_up, opt.threads);
    BigInt covered = 0;
    for (const auto& t : tabs)
      covered += inner_product(ctx, lam_up, t, opt.threads);
    rep.add("red.B.surjective",
            "the four inductions exhaust the constituents of lambda^U",
            total == 4 && covered == 4,
            "<lambda^U,lambda^U> = " + bstr(total) + ", covered " +
                bstr(covered),
            "4 and 4");
  }

  // ------------------------------------------------------------------
  // Instance C (hypothesis-violating mutant): same shape as A but with the
  // transversal X1 S124 and t0 = 1, so two transversal elements fix lambda.
  // The suite must detect the failure.
  // ------------------------------------------------------------------
  {
    LinearCharacter lam = s.lambda(F.one(), F.zero(), F.zero());
    auto ext = extension_set(ctx, lam, s.X3H, {{F.zero()}}, opt.seed);
    LinearCharacter eta = ext.extensions.front();

    auto G = std::make_shared<SubgroupDescriptor>("G.C");
    G->add_curve(ctx, s.x124_curve, /*designated_root=*/2);
    G->add_coord(ctx, 1);
    G->add_coord(ctx, 3);
    G->add_coords(ctx, {5, 6, 7, 8, 9, 10});

    auto Xd = std::make_shared<SubgroupDescriptor>("X.C");
    Xd->add_curve(ctx, s.x124_curve, /*designated_root=*/2);
    Xd->add_coord(ctx, 1);
    std::vector<UniElem> X;
    Xd->enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>&) {
      X.push_back(u);
    });

    bool structure_ok =
        detail::normalized_by(ctx, *s.X3H, G->generators(ctx)) &&
        detail::is_transversal(ctx, X, *s.X3H, G->size(ctx));
    rep.add("red.C.structure", "mutant instance is structurally well formed",
            structure_ok);

    std::set<std::vector<int>> keys;
    for (const UniElem& x : X)
      keys.insert(conjugate_character(ctx, eta, x).canonical_key(ctx));
    bool collision = keys.size() < X.size();

    auto chi = [&](const UniElem& u) { return induce_value(ctx, eta, X, u); };
    BigInt norm = detail::inner_product_over(ctx, *G, chi, chi);
    rep.add("red.C.detected",
            "hypothesis violation is detected: conjugates collide and the "
            "induction is reducible",
            collision && norm != 1,
            std::to_string(keys.size()) + " distinct, norm " + bstr(norm),
            "collision, norm > 1");
  }

  rep.wall_ms = timer.ms();
  return rep;
}

}  // namespace unichar
