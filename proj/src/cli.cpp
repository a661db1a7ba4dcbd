#include "qgal/cli.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgal/builtin.hpp"
#include "qgal/coinduce.hpp"
#include "qgal/fingrp.hpp"
#include "qgal/galilei.hpp"
#include "qgal/hopf.hpp"
#include "qgal/pairing.hpp"
#include "qgal/parser.hpp"
#include "qgal/presentation.hpp"

namespace qgal {
namespace {

using nlohmann::ordered_json;

const Presentation& pick_presentation(const std::string& which, int a_order) {
  if (which == "fq") return fq_presentation();
  return uq_presentation(a_order);
}

/// Appends another report's lines under a "prefix: " namespace.
void merge_prefixed(Report& into, const Report& from,
                    const std::string& prefix) {
  for (const auto& c : from.checks())
    into.add(prefix + ": " + c.name, c.pass, c.cases, c.detail);
}

void emit_report(const Report& rep, bool json, std::ostream& out) {
  if (json)
    out << rep.to_json().dump(2) << "\n";
  else
    out << rep.to_text();
}

Report verify_hopf(int a_order, int fq_degree, int uq_degree) {
  Report rep("Hopf axioms");
  rep.merge(check_hopf_axioms(fq_presentation(), fq_degree));
  auto cc_f = check_cocommutativity(fq_presentation(), 2);
  rep.add("function coproduct is twist-asymmetric", !cc_f.cocommutative, 1,
          cc_f.cocommutative ? "no witness found" : "witness " + cc_f.witness);
  rep.merge(check_hopf_axioms(uq_presentation(a_order), uq_degree));
  auto cc_u = check_cocommutativity(uq_presentation(a_order), 2);
  rep.add("enveloping coproduct is twist-asymmetric", !cc_u.cocommutative, 1,
          cc_u.cocommutative ? "no witness found" : "witness " + cc_u.witness);
  return rep;
}

Report verify_pairing(int a_order, int max_degree) {
  Report rep("dual pairing");
  PairingContext ctx(uq_presentation(a_order), fq_presentation());
  rep.merge(verify_pairing_axioms(ctx, max_degree));
  rep.merge(verify_uq_relations_via_pairing(ctx));
  {
    const Presentation& uq = ctx.uq();
    bool ok = true;
    long cases = 0;
    std::string det;
    for (int j = 0; j < uq.num_gens() && ok; ++j)
      for (int i = 0; i < uq.num_gens() && ok; ++i) {
        if (i == j) continue;
        ++cases;
        NCElement gj = NCElement::gen(uq, j);
        NCElement gi = NCElement::gen(uq, i);
        if (!(uq_product_via_pairing(ctx, gj, gi) == gj * gi)) {
          ok = false;
          det = uq.gen_name(j) + "*" + uq.gen_name(i);
        }
      }
    rep.add("enveloping generator products reconstructed through the pairing",
            ok, cases, det);
  }
  // Module laws sweep triples of basis elements, so they run one degree
  // lower to keep the default invocation fast.
  rep.merge(check_module_laws(ctx, std::max(1, max_degree - 1)));
  rep.merge(reconcile_mk(uq_presentation(a_order)));
  return rep;
}

Report verify_actions(int a_order, int max_degree) {
  Report rep("closed-form actions");
  rep.merge(check_differential_realization(a_order, max_degree));
  rep.merge(check_classical_limit(max_degree));
  return rep;
}

Report verify_coinduce(int order) {
  Report rep("coinduced representations");
  auto uq = make_uq_presentation_bare(order + 2);
  Character symbolic;
  Character grouplike_trivial{Rat(2), Rat(0), Rat(3)};
  Character generic{Rat(1), rat(1, 2), Rat(-1)};
  merge_prefixed(rep, check_rep_relations(*uq, symbolic, order),
                 "symbolic character");
  merge_prefixed(rep, check_rep_relations(*uq, grouplike_trivial, order),
                 "numeric character, beta = 0");
  merge_prefixed(rep, check_rep_relations(*uq, generic, order),
                 "numeric character, beta != 0");
  rep.merge(check_coinduced_classical_limit(*uq, order));
  return rep;
}

Report verify_all(int a_order, int max_degree, int order) {
  Report rep("full verification");
  rep.merge(verify_hopf(a_order, 4, 3));
  rep.merge(verify_pairing(a_order, max_degree));
  rep.merge(verify_actions(a_order, max_degree));
  rep.merge(verify_coinduce(order));
  rep.merge(check_finite_all());
  return rep;
}

FiniteGroup load_group(const std::string& spec) {
  if (spec == "s3") return FiniteGroup::symmetric3();
  if (spec == "d4") return FiniteGroup::dihedral4();
  if (spec == "q8") return FiniteGroup::quaternion8();
  if (spec.size() >= 2 && (spec[0] == 'z' || spec[0] == 'Z')) {
    try {
      return FiniteGroup::cyclic(std::stoi(spec.substr(1)));
    } catch (const std::invalid_argument&) {
      // fall through to file loading
    }
  }
  return FiniteGroup::from_file(spec);
}

std::string matrix_to_string(const Matrix& m) {
  std::string s = "[";
  for (size_t r = 0; r < m.size(); ++r) {
    if (r) s += "; ";
    for (size_t c = 0; c < m[r].size(); ++c) {
      if (c) s += ", ";
      s += m[r][c].to_string();
    }
  }
  return s + "]";
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : m) {
    ordered_json r = ordered_json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    rows.push_back(r);
  }
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Symbolic engine for the quantum extended Galilei algebra: exact "
      "normal ordering, Hopf structure, the dual pairing, closed-form "
      "actions, character-coinduced representations, and classical "
      "finite-group induction."};
  app.name("qgal");
  app.require_subcommand(1);
  int exit_code = 0;

  // Shared options (registered per subcommand that uses them).
  std::string pres_name = "fq";
  int a_order = 4;
  int max_degree = 3;
  int order = 8;
  bool json = false;
  bool unicode = false;

  auto add_pres_opts = [&](CLI::App* sub, bool with_pres) {
    if (with_pres)
      sub->add_option("-p,--presentation", pres_name,
                      "Algebra to work in: fq (function side) or uq "
                      "(enveloping side)")
          ->check(CLI::IsMember({"fq", "uq"}))
          ->capture_default_str();
    sub->add_option("--a-order", a_order,
                    "Truncation order for the deformation parameter on the "
                    "enveloping side")
        ->check(CLI::Range(0, 16))
        ->capture_default_str();
    sub->add_flag("--json", json, "Emit JSON instead of text");
    sub->add_flag("--unicode", unicode, "Use unicode generator names");
  };

  // ---- normalize / coproduct / counit / antipode -------------------------
  struct MapCmd {
    const char* name;
    const char* brief;
  };
  std::string expr_text;
  for (const MapCmd& mc :
       {MapCmd{"normalize", "Rewrite an expression to its normal form"},
        MapCmd{"coproduct", "Apply the coproduct to an expression"},
        MapCmd{"counit", "Apply the counit to an expression"},
        MapCmd{"antipode", "Apply the antipode to an expression"}}) {
    CLI::App* sub = app.add_subcommand(mc.name, mc.brief);
    sub->add_option("expr", expr_text, "Expression over the generators")
        ->required();
    add_pres_opts(sub, true);
    std::string cmd = mc.name;
    sub->callback([&, cmd]() {
      const Presentation& pres = pick_presentation(pres_name, a_order);
      NCElement e = parse_element(expr_text, pres);
      std::string result;
      if (cmd == "normalize")
        result = e.to_string(unicode);
      else if (cmd == "coproduct")
        result = coproduct(e).to_string(unicode);
      else if (cmd == "counit")
        result = counit(e).to_string(unicode);
      else
        result = antipode(e).to_string(unicode);
      if (json) {
        ordered_json j;
        j["command"] = cmd;
        j["presentation"] = pres.name();
        j["input"] = expr_text;
        j["result"] = result;
        out << j.dump(2) << "\n";
      } else {
        out << result << "\n";
      }
    });
  }

  // ---- pair ---------------------------------------------------------------
  std::string pair_u, pair_f;
  {
    CLI::App* sub = app.add_subcommand(
        "pair", "Pair an enveloping-side element with a function-side one");
    sub->add_option("u", pair_u, "Enveloping-side expression")->required();
    sub->add_option("f", pair_f, "Function-side expression")->required();
    add_pres_opts(sub, false);
    sub->callback([&]() {
      PairingContext ctx(uq_presentation(a_order), fq_presentation());
      NCElement u = parse_element(pair_u, uq_presentation(a_order));
      NCElement f = parse_element(pair_f, fq_presentation());
      CoeffPoly v = ctx.pair(u, f);
      if (json) {
        ordered_json j;
        j["command"] = "pair";
        j["u"] = pair_u;
        j["f"] = pair_f;
        j["a_order"] = a_order;
        j["value"] = v.to_string(unicode);
        out << j.dump(2) << "\n";
      } else {
        out << v.to_string(unicode) << "\n";
      }
    });
  }

  // ---- act ----------------------------------------------------------------
  std::string act_side, act_u, act_f, act_via = "closed";
  {
    CLI::App* sub = app.add_subcommand(
        "act",
        "Act with an enveloping element on a function-side element, via the "
        "closed-form operators or through the pairing");
    sub->add_option("side", act_side, "left or right")
        ->check(CLI::IsMember({"left", "right"}))
        ->required();
    sub->add_option("u", act_u, "Enveloping-side expression")->required();
    sub->add_option("f", act_f, "Function-side expression")->required();
    sub->add_option("--via", act_via, "closed (exact) or pairing (truncated)")
        ->check(CLI::IsMember({"closed", "pairing"}))
        ->capture_default_str();
    add_pres_opts(sub, false);
    sub->callback([&]() {
      const Presentation& uq = uq_presentation(a_order);
      NCElement u = parse_element(act_u, uq);
      NCElement f = parse_element(act_f, fq_presentation());
      NCElement result = NCElement::zero(fq_presentation());
      if (act_via == "pairing") {
        PairingContext ctx(uq, fq_presentation());
        result = act_side == "left" ? act_left(ctx, u, f)
                                    : act_right(ctx, f, u);
      } else {
        // A normal-form monomial is the ordered word g0^e0 g1^e1 ...; a left
        // action applies its rightmost factor first, a right action its
        // leftmost.
        for (const auto& [mono, coeff] : u.terms()) {
          NCElement g = f;
          if (act_side == "left") {
            for (int gen = static_cast<int>(mono.size()) - 1; gen >= 0; --gen)
              for (int rep = 0; rep < mono[gen]; ++rep)
                g = act_left_closed(g, gen);
          } else {
            for (int gen = 0; gen < static_cast<int>(mono.size()); ++gen)
              for (int rep = 0; rep < mono[gen]; ++rep)
                g = act_right_closed(g, gen);
          }
          result += g.scale(coeff);
        }
      }
      if (json) {
        ordered_json j;
        j["command"] = "act";
        j["side"] = act_side;
        j["via"] = act_via;
        j["u"] = act_u;
        j["f"] = act_f;
        j["result"] = result.to_string(unicode);
        out << j.dump(2) << "\n";
      } else {
        out << result.to_string(unicode) << "\n";
      }
    });
  }

  // ---- coinduce -----------------------------------------------------------
  std::string chi_alpha, chi_beta, chi_gamma, apply_expr;
  int basis_k = 0;
  {
    CLI::App* sub = app.add_subcommand(
        "coinduce",
        "Build the character-coinduced representation on truncated "
        "v-series and inspect its operators");
    sub->add_option("--alpha", chi_alpha,
                    "Character value alpha (rational; symbolic if omitted)");
    sub->add_option("--beta", chi_beta,
                    "Character value beta (rational; symbolic if omitted)");
    sub->add_option("--gamma", chi_gamma,
                    "Character value gamma (rational; symbolic if omitted)");
    sub->add_option("--order", order, "Carrier truncation order in v")
        ->check(CLI::Range(1, 24))
        ->capture_default_str();
    sub->add_option("--apply", apply_expr,
                    "Enveloping-side expression to apply");
    sub->add_option("--basis", basis_k,
                    "Start from the basis series v^k (default constant 1)")
        ->check(CLI::Range(0, 24));
    sub->add_flag("--json", json, "Emit JSON instead of text");
    sub->add_flag("--unicode", unicode, "Use unicode symbols");
    sub->callback([&]() {
      Character chi;
      if (!chi_alpha.empty()) chi.alpha = parse_rat(chi_alpha);
      if (!chi_beta.empty()) chi.beta = parse_rat(chi_beta);
      if (!chi_gamma.empty()) chi.gamma = parse_rat(chi_gamma);
      auto uq = make_uq_presentation_bare(order + 2);
      CoinducedRep rep = build_coinduced(*uq, chi, order);
      if (basis_k > order)
        throw CLI::ValidationError("--basis exceeds the carrier order");
      if (!apply_expr.empty()) {
        NCElement u = parse_element(apply_expr, *uq);
        VSeries s = rep.act(u, VSeries::basis(order, basis_k));
        if (json) {
          ordered_json j;
          j["command"] = "coinduce";
          j["order"] = order;
          j["apply"] = apply_expr;
          j["basis"] = basis_k;
          j["result"] = s.to_string(unicode);
          out << j.dump(2) << "\n";
        } else {
          out << s.to_string(unicode) << "\n";
        }
        return;
      }
      ordered_json j;
      j["command"] = "coinduce";
      j["order"] = order;
      std::vector<std::pair<std::string, std::string>> rows;
      for (int g = 0; g < 3; ++g)
        rows.emplace_back(uq->gen_name(g) + " multiplier",
                          rep.multiplier(g).to_string(unicode));
      rows.emplace_back("grouplike multiplier",
                        rep.grouplike_multiplier().to_string(unicode));
      rows.emplace_back(uq->gen_name(3) + " action", "d/dv");
      if (json) {
        for (const auto& [k, v] : rows) j[k] = v;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [k, v] : rows) out << k << ": " << v << "\n";
      }
    });
  }

  // ---- verify ---------------------------------------------------------------
  std::string suite;
  {
    CLI::App* sub = app.add_subcommand(
        "verify", "Run a verification suite and report each law checked");
    sub->add_option("suite", suite,
                    "hopf | pairing | actions | coinduce | finite | all")
        ->check(CLI::IsMember(
            {"hopf", "pairing", "actions", "coinduce", "finite", "all"}))
        ->required();
    sub->add_option("--max-degree", max_degree,
                    "Monomial degree bound for sweeps")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    sub->add_option("--order", order, "Carrier order for coinduce checks")
        ->check(CLI::Range(2, 16))
        ->capture_default_str();
    add_pres_opts(sub, false);
    sub->callback([&]() {
      Report rep("");
      if (suite == "hopf")
        rep = verify_hopf(a_order, max_degree + 1, max_degree);
      else if (suite == "pairing")
        rep = verify_pairing(a_order, max_degree);
      else if (suite == "actions")
        rep = verify_actions(a_order, max_degree);
      else if (suite == "coinduce")
        rep = verify_coinduce(order);
      else if (suite == "finite")
        rep = check_finite_all();
      else
        rep = verify_all(a_order, max_degree, order);
      emit_report(rep, json, out);
      if (!rep.all_pass()) exit_code = 1;
    });
  }

  // ---- induce-finite --------------------------------------------------------
  std::string group_spec = "z4";
  std::vector<int> subgroup_elems;
  int char_index = 0;
  {
    CLI::App* sub = app.add_subcommand(
        "induce-finite",
        "Induce a one-dimensional subgroup character to block matrices on "
        "the coset space");
    sub->add_option("--group", group_spec,
                    "z2..z12, s3, d4, q8, or a multiplication-table file")
        ->capture_default_str();
    sub->add_option("--subgroup", subgroup_elems,
                    "Subgroup elements as 0-based indices (closure is taken)")
        ->delimiter(',')
        ->required();
    sub->add_option("--char", char_index,
                    "Index into the enumerated subgroup characters")
        ->capture_default_str();
    sub->add_flag("--json", json, "Emit JSON instead of text");
    sub->callback([&]() {
      FiniteGroup g = load_group(group_spec);
      std::vector<int> k = subgroup_closure(g, subgroup_elems);
      CosetSpace cs = right_cosets(g, k);
      auto chis = one_dim_characters(g, k);
      if (chis.empty())
        throw CLI::ValidationError(
            "the subgroup has no characters over the Gaussian rationals");
      if (char_index < 0 || char_index >= static_cast<int>(chis.size()))
        throw CLI::ValidationError(
            "--char out of range; the subgroup has " +
            std::to_string(chis.size()) + " characters");
      const GroupChar& chi = chis[char_index];
      FiniteRep ind = induce_rep(char_rep(g, k, chi), cs);
      GroupChar ind_chi = rep_character(ind);
      auto irr = irreducible_characters(g);

      ordered_json j;
      j["command"] = "induce-finite";
      j["group"] = g.name();
      ordered_json sub_names = ordered_json::array();
      for (int e : k) sub_names.push_back(g.element_name(e));
      j["subgroup"] = sub_names;
      ordered_json chi_j;
      for (int e : k) chi_j[g.element_name(e)] = chi.at(e).to_string();
      j["character"] = chi_j;
      ordered_json reps_j = ordered_json::array();
      for (int r : cs.reps) reps_j.push_back(g.element_name(r));
      j["coset_representatives"] = reps_j;
      ordered_json blocks;
      for (int e = 0; e < g.size(); ++e)
        blocks[g.element_name(e)] = matrix_to_json(ind.at(e));
      j["blocks"] = blocks;
      ordered_json ind_chi_j;
      for (int e = 0; e < g.size(); ++e)
        ind_chi_j[g.element_name(e)] = ind_chi.at(e).to_string();
      j["induced_character"] = ind_chi_j;
      if (!irr.empty()) {
        ordered_json dec;
        for (const auto& [nm, sigma] : irr)
          dec[nm] = char_inner(ind_chi, sigma).to_string();
        j["decomposition"] = dec;
      }

      if (json) {
        out << j.dump(2) << "\n";
        return;
      }
      out << "group " << g.name() << ", subgroup {";
      for (size_t t = 0; t < k.size(); ++t)
        out << (t ? ", " : "") << g.element_name(k[t]);
      out << "}, character #" << char_index << "\n";
      out << "coset representatives:";
      for (int r : cs.reps) out << " " << g.element_name(r);
      out << "\n";
      for (int e = 0; e < g.size(); ++e)
        out << "  " << g.element_name(e) << " -> "
            << matrix_to_string(ind.at(e)) << "\n";
      out << "induced character:";
      for (int e = 0; e < g.size(); ++e)
        out << " " << ind_chi.at(e).to_string();
      out << "\n";
      if (!irr.empty()) {
        out << "decomposition:";
        for (const auto& [nm, sigma] : irr)
          out << " " << nm << "=" << char_inner(ind_chi, sigma).to_string();
        out << "\n";
      }
    });
  }

  // ---- dump-presentation -----------------------------------------------------
  std::string dump_which = "fq";
  bool dump_check = false;
  {
    CLI::App* sub = app.add_subcommand(
        "dump-presentation",
        "Print a presentation document (generators, weights, rules, "
        "structure maps)");
    sub->add_option("which", dump_which, "fq or uq")
        ->check(CLI::IsMember({"fq", "uq"}))
        ->required();
    add_pres_opts(sub, false);
    sub->add_flag("--check", dump_check,
                  "Also parse the document back and confirm a fixed point");
    sub->callback([&]() {
      const Presentation& pres = pick_presentation(dump_which, a_order);
      std::string text = pres.to_text();
      out << text;
      if (dump_check) {
        auto reparsed = parse_presentation(text);
        bool ok = reparsed->to_text() == text;
        out << (ok ? "# round trip: fixed point\n"
                   : "# round trip: MISMATCH\n");
        if (!ok) exit_code = 1;
      }
    });
  }

  // ---- reconcile-mk -----------------------------------------------------------
  {
    CLI::App* sub = app.add_subcommand(
        "reconcile-mk",
        "Check the grouplike-dressed generator combinations against their "
        "stated structure lines, plus negative controls");
    add_pres_opts(sub, false);
    sub->callback([&]() {
      Report rep = reconcile_mk(uq_presentation(a_order));
      emit_report(rep, json, out);
      if (!rep.all_pass()) exit_code = 1;
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.pos() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  return run(args, out, err);
}

}  // namespace qgal
