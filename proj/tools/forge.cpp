// forge: command-line front end. Each command prints JSON records, one per
// line, followed by '#'-prefixed summary lines.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>

#include "forge/errors.hpp"
#include "forge/io.hpp"
#include "forge/pipeline.hpp"

using json = nlohmann::json;
using namespace forge;

namespace {

constexpr int exit_error = 1;
constexpr int exit_violation = 3;

void emit(const json& record) { std::cout << record.dump() << '\n'; }
void summary(const std::string& line) { std::cout << "# " << line << '\n'; }

json one_based(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

json ring_json(const GroupRingElt& e) { return json{{"modulus", e.modulus}, {"coeffs", e.coeffs}}; }

std::vector<BraidKnot> load_knots(const std::string& path) { return path.empty() ? bundled_knots() : read_knot_table(path); }

Cocycle2 load_cocycle(const Quandle& q, const std::string& path) { return Cocycle2::checked(q, read_cochain(path)); }

void write_to(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  body(out);
}

void emit_invariants(const std::vector<KnotInvariant>& inv) {
  for (const auto& k : inv)
    emit({{"record", "invariant"}, {"knot", k.knot}, {"value", ring_json(k.value)}, {"text", to_string(k.value)},
          {"constant", k.constant}});
}

json verdict_json(const ExtensionVerdict& v) {
  json r{{"record", "extension_verdict"},
         {"base_order", v.base.order()},
         {"modulus", v.modulus},
         {"extension_order", v.extension.quandle.order()},
         {"is_conjugation", to_string(v.is_conjugation)},
         {"inn_preimage_found", v.inn_preimage_found},
         {"invariant_constant_on_corpus", v.invariant_constant_on_corpus},
         {"end_monochromatic_checked", v.end_monochromatic_checked}};
  if (v.rho) r["enveloping_order"] = v.rho->group_order;
  if (v.inn_preimage) r["inn_preimage_order"] = v.inn_preimage->order();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quandles, cohomology and knot invariants"};
  app.require_subcommand(1);

  std::string quandle_path, cocycle_path, knots_path, out_path, group_path, base_path, map_text, reps_dir;
  int modulus = 2, d = 1, elem = 1;
  std::size_t max_cosets = default_max_cosets;
  bool tangle = false, no_cross_check = false;

  auto add_quandle = [&](CLI::App* c) { c->add_option("--quandle,-q", quandle_path, "Cayley table file")->required()->check(CLI::ExistingFile); };
  auto add_cocycle = [&](CLI::App* c) { c->add_option("--cocycle,-c", cocycle_path, "cocycle file")->required()->check(CLI::ExistingFile); };
  auto add_knots = [&](CLI::App* c) { c->add_option("--knots,-k", knots_path, "knot table file (default: bundled table)")->check(CLI::ExistingFile); };
  auto add_cosets = [&](CLI::App* c) { c->add_option("--max-cosets", max_cosets, "coset enumeration cap"); };

  auto* validate = app.add_subcommand("validate", "check the quandle axioms");
  add_quandle(validate);
  auto* props = app.add_subcommand("props", "structural properties");
  add_quandle(props);
  auto* inn_seq = app.add_subcommand("inn-seq", "iterate the inner representation until faithful");
  add_quandle(inn_seq);
  auto* h2 = app.add_subcommand("h2", "second cohomology with Z_m coefficients");
  add_quandle(h2);
  h2->add_option("--mod,-m", modulus, "coefficient modulus")->required()->check(CLI::PositiveNumber);
  h2->add_option("--emit-reps", reps_dir, "directory for representative cocycles");
  auto* extend = app.add_subcommand("extend", "abelian extension table");
  add_quandle(extend);
  add_cocycle(extend);
  extend->add_option("--out,-o", out_path, "output table file (default: stdout)");
  auto* invariant = app.add_subcommand("invariant", "cocycle state sums of knots");
  add_quandle(invariant);
  add_cocycle(invariant);
  add_knots(invariant);
  invariant->add_flag("--tangle", tangle, "also run the 1-tangle end checks");
  auto* vendramin = app.add_subcommand("vendramin", "decide whether a connected quandle is a conjugation quandle");
  add_quandle(vendramin);
  add_cosets(vendramin);
  auto* recover = app.add_subcommand("recover-ext", "recover the Z_2 cocycle of an index-2 covering");
  add_quandle(recover);
  recover->add_option("--base", base_path, "target quandle (default: the inner representation)")->check(CLI::ExistingFile);
  recover->add_option("--map", map_text, "comma-separated 1-based images, with --base");
  recover->add_option("--out,-o", out_path, "output cocycle file (default: stdout)");
  auto* thm31 = app.add_subcommand("thm31", "conjugation verdict and constancy of the invariant for an extension");
  add_quandle(thm31);
  add_cocycle(thm31);
  add_knots(thm31);
  add_cosets(thm31);
  thm31->add_flag("--no-cross-check", no_cross_check, "skip the end-monochromatic cross-check");
  auto* thm35 = app.add_subcommand("thm35", "coefficient vanishing for a multiple of a cocycle");
  add_quandle(thm35);
  add_cocycle(thm35);
  add_knots(thm35);
  add_cosets(thm35);
  thm35->add_option("--d", d, "multiplier dividing the modulus")->required();
  auto* certify = app.add_subcommand("certify", "certificates that an extension has no inn preimage");
  add_quandle(certify);
  add_cocycle(certify);
  add_knots(certify);
  add_cosets(certify);

  auto* make = app.add_subcommand("make", "write a quandle, group or knot table");
  make->require_subcommand(1);
  int n_arg = 3, t_arg = 2;
  auto* make_dihedral = make->add_subcommand("dihedral", "dihedral quandle of order n");
  make_dihedral->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  auto* make_trivial = make->add_subcommand("trivial", "trivial quandle of order n");
  make_trivial->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  auto* make_alexander = make->add_subcommand("alexander", "Alexander quandle Z_n with multiplier t");
  make_alexander->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  make_alexander->add_option("t", t_arg)->required();
  auto* make_tetrahedral = make->add_subcommand("tetrahedral", "tetrahedral quandle of order 4");
  auto* make_conj = make->add_subcommand("conj", "conjugacy class of a group element");
  make_conj->add_option("--group,-g", group_path, "group table file")->required()->check(CLI::ExistingFile);
  make_conj->add_option("--elem,-e", elem, "1-based group element")->required();
  auto* make_galex = make->add_subcommand("galex", "GAlex(G, conjugation by an element)");
  make_galex->add_option("--group,-g", group_path, "group table file")->required()->check(CLI::ExistingFile);
  make_galex->add_option("--elem,-e", elem, "1-based group element")->required();
  auto* make_symmetric = make->add_subcommand("symmetric", "symmetric group on k points as a group table");
  make_symmetric->add_option("k", n_arg)->required()->check(CLI::Range(1, 5));
  auto* make_cyclic = make->add_subcommand("cyclic", "cyclic group of order n as a group table");
  make_cyclic->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  auto* make_knots = make->add_subcommand("knots", "the bundled knot table");
  for (auto* c : {make_dihedral, make_trivial, make_alexander, make_tetrahedral, make_conj, make_galex, make_symmetric,
                  make_cyclic, make_knots})
    c->add_option("--out,-o", out_path, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      Table t = read_table(quandle_path);
      try {
        Quandle q = validate_quandle(t);
        emit({{"record", "validate"}, {"valid", true}, {"order", q.order()}});
        summary("valid quandle of order " + std::to_string(q.order()));
      } catch (const AxiomViolation& e) {
        json w = json::array();
        for (int x : e.witness)
          if (x >= 0) w.push_back(x + 1);
        emit({{"record", "validate"}, {"valid", false}, {"axiom", to_string(e.kind)}, {"witness", w}});
        summary("invalid: " + to_string(e.kind) + " fails at " + w.dump());
        return exit_error;
      }
    } else if (*props) {
      Quandle q = read_quandle(quandle_path);
      PermGroup inn = inner_group(q);
      InnImage img = inn_image(q);
      std::vector<int> seen(q.order(), 0);
      int orbits = 0;
      for (int a = 0; a < q.order(); ++a)
        if (!seen[a]) {
          ++orbits;
          for (int b : orbit(q, a)) seen[b] = 1;
        }
      emit({{"record", "props"},
            {"order", q.order()},
            {"connected", is_connected(q)},
            {"faithful", is_faithful(q)},
            {"orbits", orbits},
            {"inn_group_order", inn.order()},
            {"inn_image_order", img.quandle.order()}});
      summary("order " + std::to_string(q.order()) + (is_connected(q) ? ", connected" : ", disconnected") +
              (is_faithful(q) ? ", faithful" : ", not faithful") + ", |Inn| = " + std::to_string(inn.order()));
    } else if (*inn_seq) {
      InnSequence seq = inn_sequence(read_quandle(quandle_path));
      std::string chain;
      for (std::size_t j = 0; j < seq.quandles.size(); ++j) {
        json r{{"record", "inn_step"}, {"step", j}, {"order", seq.quandles[j].order()}, {"faithful", is_faithful(seq.quandles[j])}};
        if (j > 0) r["map"] = one_based(seq.maps[j - 1].images);
        emit(r);
        chain += (j ? " -> " : "") + std::to_string(seq.quandles[j].order());
      }
      emit({{"record", "inn_sequence"}, {"length", seq.length()}, {"terminal_faithful", seq.terminal_faithful}});
      summary("orders " + chain);
    } else if (*h2) {
      Quandle q = read_quandle(quandle_path);
      CohomologyGroup h = second_cohomology(q, modulus);
      auto order = group_order(h.factors);
      json r{{"record", "h2"},
             {"modulus", modulus},
             {"factors", h.factors},
             {"cocycle_factors", h.cocycle_factors},
             {"coboundary_factors", h.coboundary_factors}};
      if (order) r["order"] = *order;
      emit(r);
      if (!reps_dir.empty()) {
        std::filesystem::create_directories(reps_dir);
        for (std::size_t i = 0; i < h.representatives.size(); ++i) {
          std::string path = reps_dir + "/rep" + std::to_string(i) + ".txt";
          write_to(path, [&](std::ostream& out) { write_cochain(out, h.representatives[i].cochain()); });
          emit({{"record", "h2_representative"}, {"index", i}, {"factor", h.factors[i]}, {"path", path}});
        }
      }
      std::string text;
      for (int f : h.factors) text += (text.empty() ? "Z_" : " x Z_") + std::to_string(f);
      summary("H^2(X; Z_" + std::to_string(modulus) + ") = " + (text.empty() ? "0" : text));
    } else if (*extend) {
      Quandle q = read_quandle(quandle_path);
      Extension e = abelian_extension(q, load_cocycle(q, cocycle_path));
      write_to(out_path, [&](std::ostream& out) { write_quandle(out, e.quandle); });
      if (!out_path.empty() && out_path != "-") {
        emit({{"record", "extend"}, {"order", e.quandle.order()}, {"path", out_path}});
        summary("extension of order " + std::to_string(e.quandle.order()) + " written to " + out_path);
      }
    } else if (*invariant) {
      Quandle q = read_quandle(quandle_path);
      Cocycle2 phi = load_cocycle(q, cocycle_path);
      auto knots = load_knots(knots_path);
      auto inv = invariants(q, phi, knots);
      emit_invariants(inv);
      if (tangle) {
        Extension e = abelian_extension(q, phi);
        for (const auto& k : knots) {
          Tangle t = tangle_of(k);
          emit({{"record", "tangle"},
                {"knot", k.name()},
                {"translation_equality", check_translation_equality(q, t)},
                {"extension_end_monochromatic", end_monochromatic(e.projection, t)}});
        }
      }
      std::size_t constant = 0;
      for (const auto& k : inv) constant += k.constant;
      summary(std::to_string(constant) + " of " + std::to_string(inv.size()) + " invariants constant");
    } else if (*vendramin) {
      Quandle q = read_quandle(quandle_path);
      ConjugationVerdict v = is_conjugation_quandle(q, max_cosets);
      json r{{"record", "vendramin"}, {"verdict", to_string(v.verdict)}};
      if (v.rho) {
        r["group_order"] = v.rho->group_order;
        r["injective"] = v.rho->injective;
        if (v.rho->collision) r["collision"] = {v.rho->collision->first + 1, v.rho->collision->second + 1};
      }
      emit(r);
      summary(std::string("conjugation quandle: ") + to_string(v.verdict) +
              (v.rho ? ", finite enveloping group of order " + std::to_string(v.rho->group_order) : ""));
    } else if (*recover) {
      Quandle y = read_quandle(quandle_path);
      QuandleMap f = inn_image(y).map;
      if (!base_path.empty()) {
        Quandle x = read_quandle(base_path);
        std::vector<int> images;
        std::stringstream ss(map_text);
        std::string item;
        while (std::getline(ss, item, ',')) images.push_back(std::stoi(item) - 1);
        if (static_cast<int>(images.size()) != y.order()) throw ParseError("--map needs one image per element");
        for (int v : images)
          if (v < 0 || v >= x.order()) throw ParseError("--map image out of range");
        f = QuandleMap{y, x, images};
      }
      try {
        Index2Recovery r = recover_index2_cocycle(f);
        write_to(out_path, [&](std::ostream& out) { write_cochain(out, r.cocycle.cochain()); });
        emit({{"record", "recover_ext"}, {"ok", true}, {"base_order", f.target.order()}, {"isomorphism", one_based(r.isomorphism.images)}});
        summary("index-2 covering is the abelian extension by the recovered cocycle");
      } catch (const ExtensionLawFails& e) {
        emit({{"record", "recover_ext"}, {"ok", false}, {"witness", {e.witness[0], e.witness[1], e.witness[2] + 1, e.witness[3] + 1}}});
        summary(e.what());
        return exit_error;
      }
    } else if (*thm31) {
      Quandle q = read_quandle(quandle_path);
      Cocycle2 phi = load_cocycle(q, cocycle_path);
      PipelineOptions options;
      options.max_cosets = max_cosets;
      options.cross_check = !no_cross_check;
      ExtensionVerdict v = theorem31_pipeline(q, phi, load_knots(knots_path), options);
      emit_invariants(v.invariants);
      emit(verdict_json(v));
      summary(std::string("extension of order ") + std::to_string(v.extension.quandle.order()) +
              ": conjugation " + to_string(v.is_conjugation) + ", invariants " +
              (v.invariant_constant_on_corpus ? "all constant" : "not all constant"));
    } else if (*thm35) {
      Quandle q = read_quandle(quandle_path);
      Cocycle2 psi = load_cocycle(q, cocycle_path);
      PipelineOptions options;
      options.max_cosets = max_cosets;
      Theorem35Report r = theorem35_check(q, psi, d, load_knots(knots_path), options);
      emit_invariants(r.psi_invariants);
      json vr = verdict_json(r.verdict);
      emit(vr);
      emit({{"record", "thm35"}, {"n", r.n}, {"d", r.d}, {"m", r.m}, {"hypothesis_holds", r.hypothesis_holds},
            {"vanishing_observed", r.vanishing_observed}});
      summary("coefficients off multiples of " + std::to_string(r.m) + (r.vanishing_observed ? " vanish" : " do not all vanish") +
              (r.hypothesis_holds ? " (required: the reduced extension is a conjugation quandle)" : " (not required)"));
    } else if (*certify) {
      Quandle q = read_quandle(quandle_path);
      Cocycle2 phi = load_cocycle(q, cocycle_path);
      NegativeCertificate c = negative_certificates(q, phi, load_knots(knots_path), max_cosets);
      json r{{"record", "certificate"}, {"issued", c.issued}, {"consistent", c.consistent}};
      if (c.issued) {
        r["knot"] = c.knot;
        r["value"] = ring_json(*c.value);
      }
      r["conjugation"] = c.conjugation ? to_string(*c.conjugation) : "capped";
      if (c.enveloping_order) r["enveloping_order"] = *c.enveloping_order;
      emit(r);
      if (c.issued)
        summary("the extension admits no finite quandle Y with inn(Y) isomorphic to it, and is not a conjugation quandle; witness knot " +
                c.knot + ", invariant " + to_string(*c.value));
      else
        summary("no certificate: every invariant is constant");
      if (!c.consistent) throw TheoremViolation("certificate issued for a quandle judged to be a conjugation quandle");
    } else if (*make) {
      auto write_q = [&](const Quandle& q) { write_to(out_path, [&](std::ostream& out) { write_quandle(out, q); }); };
      if (*make_dihedral) write_q(dihedral_quandle(n_arg));
      if (*make_trivial) write_q(trivial_quandle(n_arg));
      if (*make_alexander) write_q(alexander_quandle(n_arg, t_arg));
      if (*make_tetrahedral) write_q(tetrahedral_quandle());
      if (*make_conj || *make_galex) {
        FiniteGroup g = read_group(group_path);
        if (elem < 1 || elem > g.order()) throw ParseError("--elem out of range");
        if (*make_conj) write_q(conjugation_quandle(g, elem - 1).quandle);
        else write_q(galex(g, GroupAutomorphism::conjugation(g, elem - 1)));
      }
      if (*make_symmetric) write_to(out_path, [&](std::ostream& out) { write_group(out, FiniteGroup::symmetric(n_arg)); });
      if (*make_cyclic) write_to(out_path, [&](std::ostream& out) { write_group(out, FiniteGroup::cyclic(n_arg)); });
      if (*make_knots) write_to(out_path, [&](std::ostream& out) { write_knot_table(out, bundled_knots()); });
    }
  } catch (const TheoremViolation& e) {
    emit({{"record", "error"}, {"kind", "theorem_violation"}, {"message", e.what()}});
    std::cerr << "forge: theorem violation: " << e.what() << '\n';
    return exit_violation;
  } catch (const std::exception& e) {
    emit({{"record", "error"}, {"message", e.what()}});
    std::cerr << "forge: " << e.what() << '\n';
    return exit_error;
  }
  return 0;
}
