// Command-line front end: exact field checks, table export, collection of
// words, the verification suites, censuses, and orbit probes.
//
// Exit codes: 0 all requested checks pass, 1 a verification check failed,
// 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "unichar/verify.hpp"

using namespace unichar;

namespace {

int write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int q = 0;
  int p = 0;
  int f = 1;
  std::string kind = "E6";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for unipotent quotient characters"};
  app.require_subcommand(1);

  std::string emit = "text";
  std::string out_path;
  std::uint64_t seed = 0;
  int threads = 1;
  std::uint64_t budget = SubgroupDescriptor::kDefaultEnumBudget;
  bool allow_big = false;
  app.add_option("--emit", emit, "output format: text, json or csv")
      ->capture_default_str();
  app.add_option("--out", out_path, "write the report to a file");
  app.add_option("--seed", seed, "seed for all sampled checks")
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads for exact sweeps")
      ->capture_default_str();
  app.add_option("--budget", budget, "enumeration budget override");
  app.add_flag("--allow-big", allow_big,
               "acknowledge enumeration budgets beyond the default");

  // field-check
  auto* fc = app.add_subcommand("field-check", "field propositions for one (p, f)");
  int fc_p = 2, fc_f = 1;
  fc->add_option("--p", fc_p, "characteristic")->required();
  fc->add_option("--f", fc_f, "extension degree")->required();

  // tables
  auto* tb = app.add_subcommand("tables", "embedded root and relation tables");
  std::string tb_kind = "D4";
  tb->add_option("--kind", tb_kind, "D4, E6 or E8")->required();

  // collect
  auto* co = app.add_subcommand("collect", "normal form of a word");
  std::string co_kind = "D4", co_word;
  int co_q = 2;
  co->add_option("--kind", co_kind)->required();
  co->add_option("--q", co_q)->required();
  co->add_option("--word", co_word, "factors xI(c) joined by '*', ^-1 allowed")
      ->required();

  // verify
  auto* ve = app.add_subcommand("verify", "run a verification suite");
  VerifyArgs va;
  ve->add_option("--suite", va.suite,
                 "prop | reduction | d4 | e6 | e8 | properties | mutation | "
                 "goodprime")
      ->required();
  ve->add_option("--q", va.q, "field size for the group suites");
  ve->add_option("--p", va.p, "characteristic for prop/goodprime");
  ve->add_option("--f", va.f, "extension degree for prop/goodprime");
  ve->add_option("--kind", va.kind, "kind for goodprime");

  // census
  auto* ce = app.add_subcommand("census", "verified character census");
  std::string ce_kind = "D4";
  int ce_q = 2;
  ce->add_option("--kind", ce_kind)->required();
  ce->add_option("--q", ce_q)->required();

  // orbit
  auto* ob = app.add_subcommand("orbit",
                                "orbit of a restriction under the tower action");
  std::string ob_kind = "D4", ob_level = "h", ob_start;
  int ob_q = 2;
  ob->add_option("--kind", ob_kind)->required();
  ob->add_option("--q", ob_q)->required();
  ob->add_option("--level", ob_level,
                 "D4: h, hx3; E6: h, h4h3, h2; E8: h5, h4, h3, h2");
  ob->add_option("--start", ob_start,
                 "comma-separated coefficients, one per level coordinate");

  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();  // global options may follow the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SuiteOptions opt;
  opt.seed = seed;
  opt.threads = threads;
  if (budget > SubgroupDescriptor::kDefaultEnumBudget && !allow_big) {
    std::cerr << "budget overrides above the default need --allow-big\n";
    return 2;
  }
  opt.enum_budget = budget;

  try {
    if (*fc) {
      SuiteReport rep = verify_prop_fq(fc_p, fc_f);
      write_out(emit == "json" ? rep.to_json() : rep.to_text(), out_path);
      return rep.pass() ? 0 : 1;
    }

    if (*tb) {
      const RootSystemTable& t = RootSystemTable::get(kind_from_name(tb_kind));
      if (emit == "json") return write_out(t.to_json(), out_path);
      ValidationReport vr = t.validate();
      std::ostringstream os;
      os << kind_name(t.kind()) << ": " << t.root_count()
         << " roots, height bound " << t.hmax() << ", " << vr.entry_count
         << " relations, validation " << (vr.pass ? "pass" : "FAIL") << "\n";
      write_out(os.str(), out_path);
      return vr.pass ? 0 : 1;
    }

    if (*co) {
      RootKind kind = kind_from_name(co_kind);
      int p = (kind == RootKind::D4) ? 2 : (kind == RootKind::E6 ? 3 : 5);
      int f = 0;
      for (long v = co_q; v > 1; v /= p) ++f;
      long check = 1;
      for (int i = 0; i < f; ++i) check *= p;
      if (f == 0 || check != co_q) {
        std::cerr << "q must be a power of " << p << " for " << co_kind << "\n";
        return 2;
      }
      FieldSpec F = FieldSpec::conway(p, f);
      GroupContext ctx(RootSystemTable::get(kind), F);
      UniElem u = ctx.parse_word(co_word);
      if (emit == "json") {
        std::ostringstream os;
        os << "{\"coords\": {";
        bool first = true;
        for (const Letter& l : u.letters()) {
          if (!first) os << ", ";
          first = false;
          os << "\"" << l.root << "\": \"" << F.to_string(l.t) << "\"";
        }
        os << "}}";
        return write_out(os.str(), out_path);
      }
      std::cout << ctx.format(u) << "\n";
      return 0;
    }

    if (*ve) {
      SuiteReport rep;
      if (va.suite == "prop") {
        if (va.p) {
          rep = verify_prop_fq(va.p, va.f);
        } else {
          rep.suite = "prop-fq all";
          for (int p : {2, 3, 5})
            for (int f = 1; f <= 4; ++f) {
              SuiteReport sub = verify_prop_fq(p, f);
              for (auto& c : sub.checks) {
                c.id = std::to_string(p) + "^" + std::to_string(f) + "." + c.id;
                rep.checks.push_back(c);
              }
              rep.wall_ms += sub.wall_ms;
            }
        }
      } else if (va.suite == "reduction") {
        rep = verify_reduction_lemma(opt);
      } else if (va.suite == "d4") {
        rep = suite_d4(va.q ? va.q : 2, opt);
      } else if (va.suite == "e6") {
        rep = suite_e6(va.q ? va.q : 3, opt);
      } else if (va.suite == "e8") {
        rep = suite_e8(va.q ? va.q : 5, opt);
      } else if (va.suite == "properties") {
        rep = suite_properties(opt);
      } else if (va.suite == "mutation") {
        rep = suite_mutation(opt);
      } else if (va.suite == "goodprime") {
        rep = suite_good_prime(kind_from_name(va.kind), va.p ? va.p : 2, va.f,
                               opt);
      } else {
        std::cerr << "unknown suite '" << va.suite << "'\n";
        return 2;
      }
      std::cerr << "suite wall time: " << static_cast<long>(rep.wall_ms)
                << " ms\n";
      write_out(emit == "json" ? rep.to_json() : rep.to_text(), out_path);
      return rep.pass() ? 0 : 1;
    }

    if (*ce) {
      CensusResult c = count_family(kind_from_name(ce_kind), ce_q, opt);
      std::string text =
          emit == "json" ? census_to_json(c) : census_to_csv(c);
      write_out(text, out_path);
      return c.report.pass() ? 0 : 1;
    }

    if (*ob) {
      RootKind kind = kind_from_name(ob_kind);
      int p = (kind == RootKind::D4) ? 2 : (kind == RootKind::E6 ? 3 : 5);
      int f = 0;
      for (long v = ob_q; v > 1; v /= p) ++f;
      FieldSpec F = FieldSpec::conway(p, f == 0 ? 1 : f);
      GroupContext ctx(RootSystemTable::get(kind), F);

      std::unique_ptr<LevelAction> act;
      BigInt acting = 0;
      if (kind == RootKind::D4) {
        D4Setup s(ctx, F.one(), F.one(), F.one());
        acting = s.T->size(ctx);
        if (ob_level == "h")
          act = std::make_unique<LevelAction>(s.level_h(s.T->generators(ctx)));
        else if (ob_level == "hx3")
          act = std::make_unique<LevelAction>(s.level_hx3(s.T->generators(ctx)));
      } else if (kind == RootKind::E6) {
        E6Setup s(ctx);
        if (ob_level == "h") {
          acting = s.T->size(ctx);
          act = std::make_unique<LevelAction>(s.level_h(s.T->generators(ctx)));
        } else if (ob_level == "h4h3") {
          acting = s.T->size(ctx);
          act = std::make_unique<LevelAction>(s.level_h4h3(s.T->generators(ctx)));
        } else if (ob_level == "h2") {
          acting = s.S1->size(ctx);
          act = std::make_unique<LevelAction>(s.level_h2(s.S1->generators(ctx)));
        }
      } else {
        E8Setup s(ctx);
        if (ob_level == "h5") {
          acting = s.T->size(ctx);
          act = std::make_unique<LevelAction>(s.level_h5(s.T->generators(ctx)));
        } else if (ob_level == "h4") {
          acting = s.S1->size(ctx);
          act = std::make_unique<LevelAction>(s.level_h4(s.S1->generators(ctx)));
        } else if (ob_level == "h3") {
          acting = s.S2->size(ctx);
          act = std::make_unique<LevelAction>(s.level_h3(s.S2->generators(ctx)));
        } else if (ob_level == "h2") {
          acting = s.S3->size(ctx);
          act = std::make_unique<LevelAction>(s.level_h2(s.S3->generators(ctx)));
        }
      }
      if (!act) {
        std::cerr << "unknown level '" << ob_level << "' for " << ob_kind << "\n";
        return 2;
      }
      LevelAction::State st(act->state_roots().size(), F.zero());
      if (!ob_start.empty()) {
        std::istringstream is(ob_start);
        std::string tok;
        size_t i = 0;
        while (std::getline(is, tok, ',') && i < st.size())
          st[i++] = F.parse(tok);
      }
      OrbitResult orb = orbit_stabilizer_bfs(*act, st, acting, nullptr, budget);
      std::ostringstream os;
      os << "orbit " << orb.orbit_size << ", stabilizer order "
         << orb.stabilizer_order.str() << ", acting order " << acting.str()
         << "\n";
      write_out(os.str(), out_path);
      return orb.product_identity ? 0 : 1;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
