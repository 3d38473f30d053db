// avop: batch front door for verifying, enumerating and constructing
// averaging-operator structures on finite carriers.
//
// Exit codes: 0 success, 1 verification failure (structure invalid or
// property false), 2 input / guard errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "avop/group_algebra.hpp"
#include "avop/json_io.hpp"

using namespace avop;

namespace {

struct Io {
  std::string input;
  std::string output;
  std::string format = "json";
};

json witness_json(const Witness& w) {
  json j;
  j["axiom"] = w.axiom;
  j["where"] = w.where;
  return j;
}

int emit(const json& report, const Io& io, int code) {
  std::string text = report.dump(2) + "\n";
  if (!io.output.empty()) {
    std::ofstream out(io.output);
    if (!out) throw input_error("cannot open " + io.output + " for writing");
    out << text;
  } else {
    std::cout << text;
  }
  return code;
}

std::ostream& open_stream(const Io& io, std::ofstream& file) {
  if (io.output.empty()) return std::cout;
  file.open(io.output);
  if (!file) throw input_error("cannot open " + io.output + " for writing");
  return file;
}

std::string render_table(const FiniteMagma& m) {
  auto name = [&](int x) {
    return m.labels.empty() ? std::to_string(x) : m.labels[x];
  };
  std::string out;
  for (int x = 0; x < m.size; ++x) {
    for (int y = 0; y < m.size; ++y) {
      if (y) out += ' ';
      out += name(m.at(x, y));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for averaging operators on groups, racks and Leibniz-type algebras"};
  app.require_subcommand(1);

  Io io;
  int exit_code = 0;
  std::function<int()> run;

  // ---------------------------------------------------------------- verify
  CLI::App* verify = app.add_subcommand("verify", "validate a structure against its axioms");
  verify->require_subcommand(1);

  {
    CLI::App* c = verify->add_subcommand("rack", "rack / quandle axioms");
    static std::optional<int> pointed_at;
    c->add_option("--pointed-at", pointed_at, "also demand pointedness at this element");
    c->add_option("-i,--input", io.input, "magma JSON")->required();
    c->add_option("-o,--output", io.output, "write the report here instead of stdout");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma m = magma_from_json(load_json_file(io.input));
        RackReport r = validate_rack(m, pointed_at);
        json rep;
        rep["is_rack"] = r.is_rack;
        rep["is_quandle"] = r.is_quandle;
        rep["pointed_elements"] = r.pointed_elements;
        rep["is_complete"] = r.is_rack && is_complete_rack(m);
        json ws = json::array();
        for (const Witness& w : r.witnesses) ws.push_back(witness_json(w));
        rep["witnesses"] = ws;
        bool pointed_ok = true;
        for (const Witness& w : r.witnesses) pointed_ok = pointed_ok && w.axiom != "pointedness";
        return emit(rep, io, r.is_rack && pointed_ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand("group", "group axioms");
    c->add_option("-i,--input", io.input, "magma JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma m = magma_from_json(load_json_file(io.input));
        GroupResult r = validate_group(m);
        json rep;
        rep["ok"] = r.ok;
        if (r.ok) {
          rep["order"] = r.group.size();
          rep["identity"] = r.group.identity;
          rep["abelian"] = is_abelian(r.group);
        } else {
          rep["witness"] = witness_json(r.witness);
        }
        return emit(rep, io, r.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand("action", "group action axioms");
    c->add_option("-i,--input", io.input, "action JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        json j = load_json_file(io.input);
        json rep;
        try {
          GroupAction a = action_from_json(j);
          rep["ok"] = true;
          rep["group_order"] = a.group.size();
          rep["set_size"] = a.set_size;
          return emit(rep, io, 0);
        } catch (const input_error& e) {
          if (std::string(e.what()).find("not a group action") == std::string::npos) throw;
          rep["ok"] = false;
          rep["error"] = e.what();
          return emit(rep, io, 1);
        }
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand("brace", "skew brace laws and the inverse lemma");
    c->add_option("-i,--input", io.input, "brace JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        json j = load_json_file(io.input);
        BraceResult r = validate_skew_brace(magma_from_json(j.at("dot")),
                                            magma_from_json(j.at("bullet")));
        json rep;
        rep["ok"] = r.ok;
        if (!r.ok) {
          rep["witness"] = witness_json(r.why);
          return emit(rep, io, 1);
        }
        rep["two_sided"] = r.brace.two_sided;
        if (r.brace.two_sided) rep["lemma"] = brace_lemma_check(r.brace).ok;
        return emit(rep, io, 0);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand("pairing", "rack-pairing compatibility + classification");
    c->add_option("-i,--input", io.input, "pairing JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        RackPairing p = pairing_from_json(load_json_file(io.input));
        Check ck = check_rack_pairing(p.diamond, p.blackdiamond);
        json rep;
        rep["ok"] = ck.ok;
        if (!ck.ok) {
          rep["witness"] = witness_json(ck.witness);
          return emit(rep, io, 1);
        }
        PairingClass cls = classify_pairing(p);
        rep["lambda_homomorphic"] = cls.lambda_homomorphic;
        rep["lambda_antihomomorphic"] = cls.lambda_antihomomorphic;
        rep["symmetric"] = cls.symmetric;
        return emit(rep, io, 0);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand("dirack", "di-rack axioms");
    c->add_option("-i,--input", io.input, "di-rack JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        DiRack d = dirack_from_json(load_json_file(io.input));
        Check ck = check_dirack(d.diamond, d.tri);
        json rep;
        rep["ok"] = ck.ok;
        if (!ck.ok) rep["witness"] = witness_json(ck.witness);
        return emit(rep, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand("solution", "set-theoretical Yang-Baxter braid identity");
    c->add_option("-i,--input", io.input, "solution JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        SetSolution s = solution_from_json(load_json_file(io.input));
        Check ck = is_ybe_solution(s);
        json rep;
        rep["ok"] = ck.ok;
        rep["invertible"] = is_invertible(s);
        if (!ck.ok) rep["witness"] = witness_json(ck.witness);
        return emit(rep, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand("algebra", "lie / leibniz / di_leibniz / lie_leibniz axioms");
    static std::string kind, lie_path, leib_path;
    c->add_option("--kind", kind, "lie | leibniz | di_leibniz | lie_leibniz")->required();
    c->add_option("-i,--input", io.input, "structure constants (lie, leibniz, di_leibniz)");
    c->add_option("--lie", lie_path, "Lie bracket (lie_leibniz)");
    c->add_option("--leibniz", leib_path, "Leibniz bracket (lie_leibniz)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        Check ck;
        if (kind == "lie")
          ck = validate_lie(sc_from_json(load_json_file(io.input)));
        else if (kind == "leibniz")
          ck = validate_leibniz(sc_from_json(load_json_file(io.input)));
        else if (kind == "di_leibniz")
          ck = validate_di_leibniz(dileibniz_from_json(load_json_file(io.input)));
        else if (kind == "lie_leibniz")
          ck = validate_lie_leibniz(sc_from_json(load_json_file(lie_path)),
                                    sc_from_json(load_json_file(leib_path)));
        else
          throw input_error("unknown algebra kind " + kind);
        json rep;
        rep["ok"] = ck.ok;
        if (!ck.ok) rep["witness"] = witness_json(ck.witness);
        return emit(rep, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = verify->add_subcommand("representation", "Leibniz representation axioms");
    static std::string alg_path;
    c->add_option("--algebra", alg_path, "Leibniz structure constants")->required();
    c->add_option("-i,--input", io.input, "representation JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        StructureConstants h = sc_from_json(load_json_file(alg_path));
        BiRepresentation rep = rep_from_json(load_json_file(io.input));
        Check ck = validate_representation(h, rep);
        json out;
        out["ok"] = ck.ok;
        if (!ck.ok) out["witness"] = witness_json(ck.witness);
        return emit(out, io, ck.ok ? 0 : 1);
      };
    });
  }

  // ----------------------------------------------------------------- check
  CLI::App* check = app.add_subcommand("check", "evaluate operator identities and theorem equivalences");
  check->require_subcommand(1);
  static std::string group_path, rack_path, op_path, action_path, brace_path;
  static std::string magma_path, solution_path, algebra_path, rep_path, map_path;
  static std::string lie_path2, kind2;
  static int kmax = 2, lmax = 2, max_size = 0;

  {
    CLI::App* c = check->add_subcommand("averaging", "the averaging identity on a group or rack");
    c->add_option("--group", group_path, "group JSON");
    c->add_option("--rack", rack_path, "rack JSON");
    c->add_option("--operator", op_path, "operator JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        SetMap a = setmap_from_json(load_json_file(op_path));
        Check ck;
        json rep;
        if (!group_path.empty()) {
          FiniteGroup g = group_from_json(load_json_file(group_path));
          ck = is_averaging(g, a);
          rep["pointed"] = a(g.identity) == g.identity;
        } else if (!rack_path.empty()) {
          FiniteMagma q = magma_from_json(load_json_file(rack_path));
          ck = is_averaging(q, a);
        } else {
          throw input_error("check averaging needs --group or --rack");
        }
        rep["averaging"] = ck.ok;
        if (!ck.ok) rep["witness"] = witness_json(ck.witness);
        return emit(rep, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("graph",
                                        "graph and transported-axis subrack criteria vs the identity");
    c->add_option("--group", group_path, "group JSON")->required();
    c->add_option("--operator", op_path, "operator JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteGroup g = group_from_json(load_json_file(group_path));
        SetMap a = setmap_from_json(load_json_file(op_path));
        bool avg = is_averaging(g, a).ok;
        GraphCheck gc = graph_check(g, a);
        json rep;
        rep["averaging"] = avg;
        rep["graph_is_subrack"] = gc.graph_is_subrack;
        rep["axis_is_subrack"] = gc.axis_is_subrack;
        bool consistent = gc.graph_is_subrack == avg && gc.axis_is_subrack == avg;
        rep["consistent"] = consistent;
        return emit(rep, io, consistent ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("relative", "relative averaging for a group action");
    c->add_option("--action", action_path, "action JSON")->required();
    c->add_option("--operator", op_path, "operator X -> G")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        GroupAction act = action_from_json(load_json_file(action_path));
        SetMap b = setmap_from_json(load_json_file(op_path));
        Check ck = is_relative_averaging(act, b);
        json rep;
        rep["relative_averaging"] = ck.ok;
        rep["graph_agrees"] = relative_graph_check(act, b) == ck.ok;
        if (!ck.ok) rep["witness"] = witness_json(ck.witness);
        return emit(rep, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("ad-invariant", "C(g h g^-1) = g C(h) g^-1");
    c->add_option("--group", group_path, "")->required();
    c->add_option("--operator", op_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteGroup g = group_from_json(load_json_file(group_path));
        SetMap cmap = setmap_from_json(load_json_file(op_path));
        bool ok = is_ad_invariant_map(g, cmap);
        json rep;
        rep["ad_invariant"] = ok;
        return emit(rep, io, ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("hierarchy", "power hierarchy of an averaging operator");
    c->add_option("--rack", rack_path, "")->required();
    c->add_option("--operator", op_path, "")->required();
    c->add_option("--kmax", kmax, "largest first level (default 2)");
    c->add_option("--lmax", lmax, "largest level gap (default 2)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma q = magma_from_json(load_json_file(rack_path));
        SetMap a = setmap_from_json(load_json_file(op_path));
        PowerHierarchy h = power_hierarchy(q, a, kmax, lmax);
        json rep;
        rep["ok"] = h.report.ok;
        rep["levels"] = (int)h.tables.size();
        if (!h.report.ok) rep["witness"] = witness_json(h.report.witness);
        return emit(rep, io, h.report.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("group-rack", "group-rack compatibility");
    static bool pointed = false;
    c->add_option("--group", group_path, "")->required();
    c->add_option("--magma", magma_path, "the candidate rack operation")->required();
    c->add_flag("--pointed", pointed, "demand pointedness at the identity");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteGroup g = group_from_json(load_json_file(group_path));
        FiniteMagma bd = magma_from_json(load_json_file(magma_path));
        GroupRackCheck gr = is_group_rack(g, bd, pointed);
        json rep;
        rep["ok"] = gr.ok;
        rep["pointed"] = gr.pointed;
        if (!gr.ok) rep["witness"] = witness_json(gr.why);
        return emit(rep, io, gr.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand(
        "holomorph-bijection", "regular subracks of Hol(Q) against rack-pairing partners");
    c->add_option("-i,--input", io.input, "rack JSON")->required();
    c->add_option("--max-size", max_size, "carrier size guard (default 4)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma q = magma_from_json(load_json_file(io.input));
        int guard = max_size > 0 ? max_size : 4;
        Holomorph h = holomorph(q, guard);
        auto sections = enumerate_regular_subracks(h);
        auto partners = enumerate_pairing_partners(q, guard);
        bool inverse = true;
        for (const auto& s : sections) {
          RackPairing p = pairing_from_subrack(h, q, s);
          inverse = inverse && subrack_from_pairing(h, p) == s;
        }
        for (const FiniteMagma& bd : partners) {
          auto s = subrack_from_pairing(h, {q, bd});
          inverse = inverse && pairing_from_subrack(h, q, s).blackdiamond == bd;
        }
        json rep;
        rep["regular_subracks"] = (int)sections.size();
        rep["rack_pairings"] = (int)partners.size();
        rep["equal"] = sections.size() == partners.size();
        rep["mutually_inverse"] = inverse;
        bool ok = rep["equal"].get<bool>() && inverse;
        return emit(rep, io, ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("dirack-roundtrip",
                                        "pairing -> di-rack -> pairing table identity");
    c->add_option("-i,--input", io.input, "pairing or di-rack JSON (sniffed by fields)")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        json j = load_json_file(io.input);
        json rep;
        bool ok;
        if (j.contains("tri")) {
          DiRack d = dirack_from_json(j);
          DiRack back = dirack_from_pairing(pairing_from_dirack(d));
          ok = back.diamond == d.diamond && back.tri == d.tri;
          rep["direction"] = "dirack-pairing-dirack";
        } else {
          RackPairing p = pairing_from_json(j);
          RackPairing back = pairing_from_dirack(dirack_from_pairing(p));
          ok = back.diamond == p.diamond && back.blackdiamond == p.blackdiamond;
          rep["direction"] = "pairing-dirack-pairing";
        }
        rep["identity"] = ok;
        return emit(rep, io, ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("brace-averaging", "averaging on a two-sided skew brace");
    c->add_option("--brace", brace_path, "")->required();
    c->add_option("--operator", op_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        SkewBrace b = brace_from_json(load_json_file(brace_path));
        SetMap a = setmap_from_json(load_json_file(op_path));
        Check ck = skew_brace_averaging(b, a);
        json rep;
        rep["averaging"] = ck.ok;
        if (!ck.ok) rep["witness"] = witness_json(ck.witness);
        return emit(rep, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("hopf", "extension to the group algebra and back");
    c->add_option("--group", group_path, "")->required();
    c->add_option("--operator", op_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteGroup g = group_from_json(load_json_file(group_path));
        SetMap a = setmap_from_json(load_json_file(op_path));
        bool avg = is_averaging(g, a).ok;
        LinearMap b = extend_operator(g, a);
        bool hopf = is_hopf_averaging(g, b).ok;
        RestrictResult r = restrict_operator(g, b);
        json rep;
        rep["group_averaging"] = avg;
        rep["hopf_averaging"] = hopf;
        rep["restrict_matches"] = r.ok && r.map == a;
        bool consistent = avg == hopf && r.ok && r.map == a;
        rep["consistent"] = consistent;
        return emit(rep, io, consistent ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("braided-averaging", "averaging on a braided set");
    c->add_option("--solution", solution_path, "")->required();
    c->add_option("--operator", op_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        SetSolution s = solution_from_json(load_json_file(solution_path));
        SetMap a = setmap_from_json(load_json_file(op_path));
        Check ck = is_braided_averaging(s, a);
        json rep;
        rep["braided_averaging"] = ck.ok;
        if (!ck.ok) rep["witness"] = witness_json(ck.witness);
        return emit(rep, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("linear-averaging", "averaging of a linear operator");
    c->add_option("--kind", kind2, "lie | leibniz | leibniz_left | ad_invariant")->required();
    c->add_option("--algebra", algebra_path, "structure constants")->required();
    c->add_option("--map", map_path, "linear operator")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        StructureConstants alg = sc_from_json(load_json_file(algebra_path));
        LinearMap p = linmap_from_json(load_json_file(map_path));
        LinearAvgKind k;
        if (kind2 == "lie") k = LinearAvgKind::lie;
        else if (kind2 == "leibniz") k = LinearAvgKind::leibniz;
        else if (kind2 == "leibniz_left") k = LinearAvgKind::leibniz_left;
        else if (kind2 == "ad_invariant") k = LinearAvgKind::ad_invariant;
        else throw input_error("unknown linear averaging kind " + kind2);
        Check ck = is_linear_averaging(k, alg, p);
        json rep;
        rep["averaging"] = ck.ok;
        if (!ck.ok) rep["witness"] = witness_json(ck.witness);
        return emit(rep, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("relative-linear",
                                        "relative averaging against a representation");
    c->add_option("--algebra", algebra_path, "Leibniz structure constants")->required();
    c->add_option("--rep", rep_path, "representation")->required();
    c->add_option("--map", map_path, "operator V -> h")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        StructureConstants h = sc_from_json(load_json_file(algebra_path));
        BiRepresentation rep = rep_from_json(load_json_file(rep_path));
        LinearMap p = linmap_from_json(load_json_file(map_path));
        Check ck = is_relative_averaging_linear(h, rep, p);
        json out;
        out["relative_averaging"] = ck.ok;
        out["graph_agrees"] = graph_check_linear(h, rep, p) == ck.ok;
        if (!ck.ok) out["witness"] = witness_json(ck.witness);
        return emit(out, io, ck.ok ? 0 : 1);
      };
    });
  }
  {
    CLI::App* c = check->add_subcommand("ybe-rack",
                                        "braid identity of r(x,y) = (x<>y, x) against the rack axioms");
    c->add_option("-i,--input", io.input, "magma JSON with bijective left translations")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma m = magma_from_json(load_json_file(io.input));
        bool rack = validate_rack(m).is_rack;
        bool ybe = is_ybe_solution(braided_from_rack(m)).ok;
        json rep;
        rep["is_rack"] = rack;
        rep["is_ybe"] = ybe;
        rep["equivalent"] = rack == ybe;
        return emit(rep, io, rack == ybe ? 0 : 1);
      };
    });
  }

  // ------------------------------------------------------------- enumerate
  CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive searches, streamed as JSON lines");
  enumerate->require_subcommand(1);
  static bool pointed_only = false;
  static std::optional<int> pointed_at_opt;

  {
    CLI::App* c = enumerate->add_subcommand("averaging", "all averaging operators on a carrier");
    c->add_option("--group", group_path, "group JSON");
    c->add_option("--rack", rack_path, "rack JSON");
    c->add_flag("--pointed-only", pointed_only, "only operators fixing the distinguished element");
    c->add_option("--pointed-at", pointed_at_opt, "distinguished element for racks");
    c->add_option("--max-size", max_size, "carrier size guard (default 8)");
    c->add_option("-o,--output", io.output, "stream here and print a count report to stdout");
    c->callback([&]() {
      run = [&]() {
        EnumOptions opt;
        opt.pointed_only = pointed_only;
        opt.pointed_at = pointed_at_opt;
        if (max_size > 0) opt.max_size = max_size;
        std::vector<SetMap> ops;
        if (!group_path.empty())
          ops = enumerate_averaging(group_from_json(load_json_file(group_path)), opt);
        else if (!rack_path.empty())
          ops = enumerate_averaging(magma_from_json(load_json_file(rack_path)), opt);
        else
          throw input_error("enumerate averaging needs --group or --rack");
        std::ofstream file;
        std::ostream& out = open_stream(io, file);
        for (const SetMap& a : ops) out << setmap_to_json(a).dump() << "\n";
        if (!io.output.empty()) {
          json rep;
          rep["count"] = (int)ops.size();
          rep["output"] = io.output;
          std::cout << rep.dump(2) << "\n";
        }
        return 0;
      };
    });
  }
  {
    CLI::App* c = enumerate->add_subcommand("regular-subracks", "regular subracks of the holomorph");
    c->add_option("-i,--input", io.input, "rack JSON")->required();
    c->add_option("--max-size", max_size, "carrier size guard (default 6)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma q = magma_from_json(load_json_file(io.input));
        Holomorph h = holomorph(q, max_size > 0 ? max_size : 6);
        auto sections = enumerate_regular_subracks(h);
        std::ofstream file;
        std::ostream& out = open_stream(io, file);
        for (const auto& s : sections) {
          json line;
          line["section"] = s;
          line["blackdiamond"] = magma_to_json(pairing_from_subrack(h, q, s).blackdiamond)["table"];
          out << line.dump() << "\n";
        }
        if (!io.output.empty()) {
          json rep;
          rep["count"] = (int)sections.size();
          rep["output"] = io.output;
          std::cout << rep.dump(2) << "\n";
        }
        return 0;
      };
    });
  }
  {
    CLI::App* c = enumerate->add_subcommand("automorphisms", "automorphism group of a group or rack");
    c->add_option("--group", group_path, "group JSON");
    c->add_option("--rack", rack_path, "rack JSON");
    c->add_option("--max-size", max_size, "size guard (group default 12, rack default 6)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        std::vector<SetMap> auts;
        if (!group_path.empty())
          auts = automorphism_group(group_from_json(load_json_file(group_path)),
                                    max_size > 0 ? max_size : 12);
        else if (!rack_path.empty())
          auts = rack_automorphism_group(magma_from_json(load_json_file(rack_path)),
                                         max_size > 0 ? max_size : 6);
        else
          throw input_error("enumerate automorphisms needs --group or --rack");
        std::ofstream file;
        std::ostream& out = open_stream(io, file);
        for (const SetMap& f : auts) out << setmap_to_json(f).dump() << "\n";
        if (!io.output.empty()) {
          json rep;
          rep["count"] = (int)auts.size();
          rep["output"] = io.output;
          std::cout << rep.dump(2) << "\n";
        }
        return 0;
      };
    });
  }

  // ------------------------------------------------------------- construct
  CLI::App* construct = app.add_subcommand("construct", "build derived objects");
  construct->require_subcommand(1);
  static std::string kind3, twist_path;
  static int param_n = 0, param_k = 1;

  auto emit_obj = [&](const json& obj) {
    if (!io.output.empty()) {
      std::ofstream out(io.output);
      if (!out) throw input_error("cannot open " + io.output + " for writing");
      out << obj.dump(2) << "\n";
    } else {
      std::cout << obj.dump(2) << "\n";
    }
    return 0;
  };

  {
    CLI::App* c = construct->add_subcommand(
        "standard", "trivial / flip / takasaki / alexander / conjugation racks");
    c->add_option("--kind", kind3, "")->required();
    c->add_option("--n", param_n, "carrier size (trivial, flip)");
    c->add_option("--group", group_path, "group JSON (takasaki, alexander, conjugation)");
    c->add_option("--twist", twist_path, "automorphism JSON (alexander)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma m;
        if (kind3 == "trivial") m = trivial_rack(param_n);
        else if (kind3 == "flip") m = flip_rack(param_n);
        else if (kind3 == "takasaki")
          m = takasaki_quandle(group_from_json(load_json_file(group_path)));
        else if (kind3 == "alexander")
          m = alexander_quandle(group_from_json(load_json_file(group_path)),
                                setmap_from_json(load_json_file(twist_path)));
        else if (kind3 == "conjugation")
          m = conjugation_rack(group_from_json(load_json_file(group_path)));
        else throw input_error("unknown standard rack kind " + kind3);
        return emit_obj(magma_to_json(m));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("group", "cyclic / klein / symmetric groups");
    c->add_option("--kind", kind3, "")->required();
    c->add_option("--n", param_n, "order (cyclic) or points (symmetric)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteGroup g;
        if (kind3 == "cyclic") g = cyclic_group(param_n);
        else if (kind3 == "klein") g = klein_four_group();
        else if (kind3 == "symmetric") g = symmetric_group(param_n);
        else throw input_error("unknown group kind " + kind3);
        return emit_obj(group_to_json(g));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("descendent", "descendent rack of an averaging operator");
    c->add_option("--group", group_path, "");
    c->add_option("--rack", rack_path, "");
    c->add_option("--operator", op_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        SetMap a = setmap_from_json(load_json_file(op_path));
        FiniteMagma m;
        if (!group_path.empty())
          m = descendent_rack(group_from_json(load_json_file(group_path)), a);
        else if (!rack_path.empty())
          m = descendent_rack(magma_from_json(load_json_file(rack_path)), a);
        else
          throw input_error("construct descendent needs --group or --rack");
        return emit_obj(magma_to_json(m));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("product", "adjoint / action / transported pair racks");
    c->add_option("--kind", kind3, "adjoint | action | transported")->required();
    c->add_option("--group", group_path, "group JSON (adjoint, transported)");
    c->add_option("--action", action_path, "action JSON (action)");
    c->add_option("--operator", op_path, "any map (transported)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma m;
        if (kind3 == "adjoint")
          m = adjoint_pair_rack(group_from_json(load_json_file(group_path)));
        else if (kind3 == "action")
          m = action_pair_rack(action_from_json(load_json_file(action_path)));
        else if (kind3 == "transported")
          m = transported_pair_rack(group_from_json(load_json_file(group_path)),
                                    setmap_from_json(load_json_file(op_path)));
        else throw input_error("unknown product kind " + kind3);
        return emit_obj(magma_to_json(m));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("holomorph", "holomorph rack of a rack");
    c->add_option("-i,--input", io.input, "")->required();
    c->add_option("--max-size", max_size, "size guard (default 6)");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma q = magma_from_json(load_json_file(io.input));
        Holomorph h = holomorph(q, max_size > 0 ? max_size : 6);
        json obj;
        json auts = json::array();
        for (const SetMap& f : h.aut) auts.push_back(f.image);
        obj["aut"] = auts;
        obj["rack"] = magma_to_json(h.rack);
        return emit_obj(obj);
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("conjugation-pairing", "rack-pairing of a two-sided brace");
    c->add_option("--brace", brace_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        SkewBrace b = brace_from_json(load_json_file(brace_path));
        return emit_obj(pairing_to_json(brace_to_pairing(b)));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand(
        "brace-pairing", "pairing induced by a pointed brace averaging operator");
    c->add_option("--brace", brace_path, "")->required();
    c->add_option("--operator", op_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        SkewBrace b = brace_from_json(load_json_file(brace_path));
        SetMap a = setmap_from_json(load_json_file(op_path));
        return emit_obj(pairing_to_json(brace_averaging_pairing(b, a)));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("dirack", "di-rack of a rack-pairing");
    c->add_option("-i,--input", io.input, "pairing JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        RackPairing p = pairing_from_json(load_json_file(io.input));
        return emit_obj(dirack_to_json(dirack_from_pairing(p)));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("pairing", "rack-pairing of a di-rack");
    c->add_option("-i,--input", io.input, "di-rack JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        DiRack d = dirack_from_json(load_json_file(io.input));
        return emit_obj(pairing_to_json(pairing_from_dirack(d)));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand(
        "recover-averaging", "the operator realizing a pairing over a complete rack");
    c->add_option("-i,--input", io.input, "pairing JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        RackPairing p = pairing_from_json(load_json_file(io.input));
        return emit_obj(setmap_to_json(recover_averaging(p)));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("k-pairing", "tower of descendent racks");
    c->add_option("--rack", rack_path, "")->required();
    c->add_option("--operator", op_path, "")->required();
    c->add_option("--k", param_k, "number of levels above the base")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteMagma q = magma_from_json(load_json_file(rack_path));
        SetMap a = setmap_from_json(load_json_file(op_path));
        auto ops = k_pairing_from_averaging(q, a, param_k);
        json obj;
        obj["size"] = q.size;
        json tables = json::array();
        for (const FiniteMagma& t : ops) tables.push_back(magma_to_json(t)["table"]);
        obj["ops"] = tables;
        return emit_obj(obj);
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand(
        "embed-group-rack", "embedding of a pointed group-rack into an averaging group");
    c->add_option("--group", group_path, "")->required();
    c->add_option("--magma", magma_path, "the rack operation")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        FiniteGroup g = group_from_json(load_json_file(group_path));
        FiniteMagma bd = magma_from_json(load_json_file(magma_path));
        GroupRackEmbedding e = embed_group_rack(g, bd);
        json obj;
        obj["inner_order"] = (int)e.inner.elements.size();
        obj["product"] = group_to_json(e.product);
        obj["averaging"] = setmap_to_json(e.averaging);
        obj["inclusion"] = setmap_to_json(e.inclusion);
        return emit_obj(obj);
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("hemi-semidirect", "hemi-semidirect di-Leibniz product");
    c->add_option("--algebra", algebra_path, "Leibniz structure constants")->required();
    c->add_option("--rep", rep_path, "representation")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        StructureConstants h = sc_from_json(load_json_file(algebra_path));
        BiRepresentation rep = rep_from_json(load_json_file(rep_path));
        return emit_obj(dileibniz_to_json(hemi_semidirect(h, rep)));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand(
        "induced-di-leibniz", "di-Leibniz induced by a relative averaging operator");
    c->add_option("--algebra", algebra_path, "")->required();
    c->add_option("--rep", rep_path, "")->required();
    c->add_option("--map", map_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        StructureConstants h = sc_from_json(load_json_file(algebra_path));
        BiRepresentation rep = rep_from_json(load_json_file(rep_path));
        LinearMap p = linmap_from_json(load_json_file(map_path));
        return emit_obj(dileibniz_to_json(induced_di_leibniz(h, rep, p)));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("leibnizification",
                                            "quotient Leibniz algebra of a di-Leibniz algebra");
    c->add_option("-i,--input", io.input, "di-Leibniz JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        DiLeibniz d = dileibniz_from_json(load_json_file(io.input));
        Leibnizification l = leibnizification(d);
        json obj;
        obj["quotient_dim"] = l.quo.dim();
        obj["leibniz"] = sc_to_json(l.leib);
        obj["q"] = linmap_to_json(l.q);
        obj["rep"] = rep_to_json(l.rep);
        return emit_obj(obj);
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("embed-di-leibniz",
                                            "embedding into an averaging Leibniz algebra");
    c->add_option("-i,--input", io.input, "di-Leibniz JSON")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        DiLeibniz d = dileibniz_from_json(load_json_file(io.input));
        DiLeibnizEmbedding e = embed_di_leibniz(d);
        json obj;
        obj["quotient_dim"] = e.base.quo.dim();
        obj["ambient"] = sc_to_json(e.ambient);
        obj["averaging"] = linmap_to_json(e.averaging);
        obj["inclusion"] = linmap_to_json(e.inclusion);
        return emit_obj(obj);
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("embed-lie-leibniz",
                                            "embedding into an averaging Lie algebra");
    c->add_option("--lie", lie_path2, "Lie bracket")->required();
    c->add_option("--leibniz", algebra_path, "Leibniz bracket")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        StructureConstants lie = sc_from_json(load_json_file(lie_path2));
        StructureConstants leib = sc_from_json(load_json_file(algebra_path));
        LieLeibnizEmbedding e = embed_lie_leibniz(lie, leib);
        json obj;
        obj["quotient_dim"] = e.quo.dim();
        obj["ambient"] = sc_to_json(e.ambient);
        obj["averaging"] = linmap_to_json(e.averaging);
        obj["inclusion"] = linmap_to_json(e.inclusion);
        return emit_obj(obj);
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand(
        "descendent-leibniz", "descendent Leibniz bracket of a Lie averaging operator");
    c->add_option("--lie", lie_path2, "")->required();
    c->add_option("--map", map_path, "")->required();
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        StructureConstants lie = sc_from_json(load_json_file(lie_path2));
        LinearMap p = linmap_from_json(load_json_file(map_path));
        return emit_obj(sc_to_json(descendent_leibniz(lie, p)));
      };
    });
  }
  {
    CLI::App* c = construct->add_subcommand("braided", "braiding of a rack or a skew bracket");
    c->add_option("--rack", rack_path, "rack JSON -> set solution");
    c->add_option("--lie", lie_path2, "skew bracket -> tensor-square matrix");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        if (!rack_path.empty()) {
          FiniteMagma q = magma_from_json(load_json_file(rack_path));
          return emit_obj(solution_to_json(braided_from_rack(q)));
        }
        if (!lie_path2.empty()) {
          StructureConstants g = sc_from_json(load_json_file(lie_path2));
          return emit_obj(linmap_to_json(braided_from_lie(g)));
        }
        throw input_error("construct braided needs --rack or --lie");
      };
    });
  }

  // ---------------------------------------------------------------- export
  {
    CLI::App* c = app.add_subcommand("export", "re-emit an object as canonical JSON or a text table");
    c->add_option("-i,--input", io.input, "magma-like JSON")->required();
    c->add_option("--format", io.format, "json | table");
    c->add_option("-o,--output", io.output, "");
    c->callback([&]() {
      run = [&]() {
        json j = load_json_file(io.input);
        if (io.format == "json") {
          if (j.contains("table")) return emit_obj(magma_to_json(magma_from_json(j)));
          if (j.contains("r")) return emit_obj(solution_to_json(solution_from_json(j)));
          return emit_obj(j);
        }
        if (io.format != "table") throw input_error("unknown export format " + io.format);
        std::string text;
        if (j.contains("table")) text = render_table(magma_from_json(j));
        else throw input_error("only magma tables render as text");
        if (!io.output.empty()) {
          std::ofstream out(io.output);
          out << text;
        } else {
          std::cout << text;
        }
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
    if (run) exit_code = run();
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    std::cerr << "guard error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "invalid structure: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
