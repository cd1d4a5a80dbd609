#include "solvco/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "solvco/almost_abelian.hpp"
#include "solvco/catalog.hpp"
#include "solvco/cohomology.hpp"
#include "solvco/errors.hpp"
#include "solvco/lie_core.hpp"
#include "solvco/splitting.hpp"
#include "solvco/structure_file.hpp"

namespace solvco {

namespace {

enum class Format { Plain, Tsv };

// Key/value emitter: plain prints `key value` with dots turned into spaces,
// tsv prints `key<TAB>value`.
class Report {
 public:
  Report(std::ostream& os, Format f) : os_(os), format_(f) {}

  template <typename T>
  void put(const std::string& key, const T& value) {
    std::ostringstream v;
    v << value;
    if (format_ == Format::Tsv) {
      os_ << key << '\t' << v.str() << '\n';
    } else {
      std::string k = key;
      std::replace(k.begin(), k.end(), '.', ' ');
      os_ << k << ' ' << v.str() << '\n';
    }
  }

 private:
  std::ostream& os_;
  Format format_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string read_stream(std::istream& is) {
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string read_source(const std::string& source, std::istream& in) {
  if (source == "-") return read_stream(in);
  std::ifstream f(source);
  if (!f) throw InputError("cannot read '" + source + "'");
  return read_stream(f);
}

bool is_catalog_name(const std::string& s) {
  const auto names = catalog_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

LieAlgebra load_algebra(const std::string& source, std::istream& in, bool check = true) {
  if (source != "-" && !std::filesystem::exists(source)) {
    if (is_catalog_name(source)) return catalog_get(source).algebra;
    throw UnknownName("'" + source + "' is neither a file nor a catalog entry");
  }
  return parse_structure_file(read_source(source, in), check);
}

std::string join_dims(const std::vector<Subspace>& series) {
  std::string s;
  for (const auto& sub : series) s += (s.empty() ? "" : ",") + std::to_string(sub.dim());
  return s;
}

std::vector<std::size_t> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) || tok.size() > 6)
      throw InputError("bad index '" + tok + "' in " + what);
    const std::size_t v = std::stoul(tok);
    if (v == 0) throw InputError(what + " indices are 1-based");
    out.push_back(v - 1);
  }
  return out;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const std::string& file, std::ostream& out, std::ostream& err, std::istream& in) {
  const LieAlgebra g = load_algebra(file, in, false);
  if (auto v = validate(g)) {
    err << "invalid: " << v->describe() << '\n';
    return kExitMath;
  }
  out << "ok: Lie algebra of dimension " << g.dim() << '\n';
  return kExitOk;
}

int cmd_info(const std::string& file, Format fmt, std::ostream& out, std::istream& in) {
  const LieAlgebra g = load_algebra(file, in);
  Report r(out, fmt);
  r.put("dim", g.dim());
  r.put("derived_series", join_dims(derived_series(g)));
  r.put("lower_central_series", join_dims(lower_central_series(g)));
  const bool solvable = is_solvable(g);
  r.put("solvable", yes_no(solvable));
  r.put("nilpotent", yes_no(is_nilpotent(g)));
  r.put("unimodular", yes_no(is_unimodular(g)));
  if (!solvable) {
    r.put("flag.status", "n/a");
    r.put("flag.reason", "not solvable");
    return kExitOk;
  }
  const FlagCertificate flag = completely_solvable_flag(g);
  r.put("flag.status", to_string(flag.status));
  if (!flag.reason.empty()) r.put("flag.reason", flag.reason);
  if (flag.witness)
    r.put("flag.witness",
          "ad(e" + std::to_string(flag.witness->basis_index + 1) + ") has factor " + flag.witness->factor.to_string());
  for (std::size_t k = 1; k < flag.chain.size(); ++k) r.put("flag.ideal." + std::to_string(k), flag.chain[k].to_string());
  return flag.status == Tristate::Undetermined ? kExitUndetermined : kExitOk;
}

int cmd_cohomology(const std::string& file, bool reps, std::optional<std::size_t> max_degree, std::size_t max_dim,
                   Format fmt, std::ostream& out, std::ostream& err, std::istream& in) {
  const LieAlgebra g = load_algebra(file, in);
  ComplexOptions opts;
  opts.max_dim = max_dim;
  opts.max_degree = max_degree;
  const CEComplex cx = build_complex(g, opts);
  const CohomologyResult res = betti_numbers(cx, reps);
  Report r(out, fmt);
  r.put("dim", g.dim());
  if (res.truncated) r.put("truncated", yes_no(true));
  for (std::size_t k = 0; k < res.betti.size(); ++k) r.put("betti." + std::to_string(k), res.betti[k]);
  if (reps)
    for (std::size_t k = 0; k < res.representatives.size(); ++k)
      for (std::size_t i = 0; i < res.representatives[k].size(); ++i)
        r.put("rep." + std::to_string(k) + "." + std::to_string(i),
              format_cochain(res.representatives[k][i], cx.bases[k], g.dim()));
  const StructuralReport checks = structural_checks(res, g);
  r.put("unimodular", yes_no(checks.unimodular));
  if (checks.complete) {
    r.put("duality", yes_no(checks.duality_holds));
    r.put("euler", checks.euler_characteristic);
  }
  if (!checks.all_ok()) {
    for (const auto& note : checks.notes) err << "check failed: " << note << '\n';
    return kExitMath;
  }
  return kExitOk;
}

KillMode parse_kill(const std::string& s) {
  if (s == "full") return KillMode::Full;
  if (s == "compact") return KillMode::CompactOnly;
  if (s == "selected") return KillMode::Selected;
  throw InputError("unknown kill mode '" + s + "'");
}

std::string describe_indices(const std::vector<std::size_t>& idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "e" : ", e") + std::to_string(i + 1);
  return "span{" + s + "}";
}

std::string comment_block(const std::string& text) {
  std::istringstream is(text);
  std::string line, out;
  while (std::getline(is, line)) out += "# " + line + "\n";
  return out;
}

int cmd_split(const std::string& file, const std::string& complement, const std::string& kill, const std::string& select,
              bool malcev, std::ostream& out, std::istream& in) {
  const LieAlgebra g = load_algebra(file, in);
  const auto idx = parse_index_list(complement, "--complement");
  const SplittingInput input = splitting_input_from_complement(g, idx);
  std::ostringstream head;
  head << "# source: " << file << "\n# V = " << describe_indices(idx) << "\n";

  if (malcev) {
    const SplittingResult res = malcev_splitting(input);
    const std::size_t k = res.kill.rank();
    head << "# Malcev splitting: e1..e" << k << " span a copy of V, e" << (k + 1) << "..e" << (k + g.dim())
         << " are the original e1..e" << g.dim() << "\n# g embeds as X -> (-X_V, X); its induced bracket is the nilshadow\n";
    out << head.str() << dump_structure(res.output);
    return kExitOk;
  }

  const KillMode mode = parse_kill(kill);
  std::vector<std::vector<std::size_t>> selection;
  if (mode == KillMode::Selected) {
    std::stringstream ss(select);
    std::string group;
    while (std::getline(ss, group, ';')) selection.push_back(parse_index_list(group, "--select"));
    selection.resize(input.v.dim());
  } else if (!select.empty()) {
    throw InputError("--select only applies to --kill selected");
  }
  const KillMap km = kill_map(input, mode, selection);
  const SplittingResult res = modified_bracket(input, km);
  head << "# kill: " << to_string(mode) << "\n";
  for (std::size_t a = 0; a < km.rank(); ++a)
    head << "# K" << (a + 1) << (km.operators[a].is_zero() ? " = 0" : " != 0, rank " + std::to_string(rank(km.operators[a])))
         << "\n";
  out << head.str() << dump_structure(res.output);
  return kExitOk;
}

int cmd_almost_abelian(const std::string& holonomy, const std::string& derivation, const std::string& scale, Format fmt,
                       std::ostream& out, std::istream& in) {
  if (holonomy.empty() && derivation.empty()) throw InputError("give --holonomy and/or --derivation");
  if (holonomy == "-" && derivation == "-") throw InputError("only one matrix can be read from stdin");
  ZScale zs;
  if (scale == "1")
    zs = ZScale::One;
  else if (scale == "pi")
    zs = ZScale::Pi;
  else
    throw InputError("--scale must be 1 or pi");
  std::optional<Matrix> b, z;
  if (!holonomy.empty()) b = parse_matrix(read_source(holonomy, in));
  if (!derivation.empty()) z = parse_matrix(read_source(derivation, in));
  const AlmostAbelianReport rep = analyze_almost_abelian(make_holonomy_input(b, z, zs));

  Report r(out, fmt);
  if (rep.b1) r.put("b1", *rep.b1);
  if (fmt == Format::Plain) {
    out << "mostow " << to_string(rep.mostow.status) << ' ' << rep.mostow.reason << '\n';
  } else {
    r.put("mostow.status", to_string(rep.mostow.status));
    r.put("mostow.reason", rep.mostow.reason);
  }
  if (!rep.mostow.witness.empty()) r.put("mostow.witness", rep.mostow.witness);
  if (b) {
    std::string cyc;
    for (const auto& [d, mult] : rep.cyclotomic)
      cyc += (cyc.empty() ? "" : ",") + ("Phi_" + std::to_string(d)) + (mult > 1 ? "^" + std::to_string(mult) : "");
    r.put("cyclotomic", cyc.empty() ? "none" : cyc);
  }
  if (rep.order_m) r.put("order", *rep.order_m);
  if (rep.cover_type) r.put("cover", to_string(*rep.cover_type));
  if (rep.invariant_betti)
    for (std::size_t k = 0; k < rep.invariant_betti->size(); ++k)
      r.put("betti." + std::to_string(k), (*rep.invariant_betti)[k]);
  if (rep.ce_betti) {
    for (std::size_t k = 0; k < rep.ce_betti->size(); ++k) r.put("ce_betti." + std::to_string(k), (*rep.ce_betti)[k]);
    r.put("de_rham_valid", yes_no(rep.de_rham_valid));
  }
  return rep.mostow.status == MostowStatus::Undetermined ? kExitUndetermined : kExitOk;
}

int cmd_catalog(const std::string& name, std::ostream& out) {
  if (name.empty()) {
    for (const auto& n : catalog_names()) out << n << '\t' << to_string(catalog_get(n).classification) << '\n';
    return kExitOk;
  }
  const CatalogEntry e = catalog_get(name);
  out << "# " << e.name << " (" << to_string(e.classification) << ")\n";
  if (!e.complement.empty()) out << "# suggested V = " << describe_indices(e.complement) << "\n";
  out << comment_block(e.notes) << dump_structure(e.algebra);
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact cohomology and splitting tools for solvable Lie algebras", "solvco"};
  app.require_subcommand(1);
  std::string file, fmt_name = "plain";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt_name, "Output format")->check(CLI::IsMember({"plain", "tsv"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check antisymmetry and the Jacobi identity");
  validate_cmd->add_option("FILE", file, "Structure file, '-' or catalog name")->required();

  auto* info_cmd = app.add_subcommand("info", "Series, unimodularity and the completely solvable flag");
  info_cmd->add_option("FILE", file, "Structure file, '-' or catalog name")->required();
  add_format(info_cmd);

  bool reps = false;
  std::optional<std::size_t> max_degree;
  std::size_t max_dim = 12;
  auto* coh_cmd = app.add_subcommand("cohomology", "Chevalley-Eilenberg Betti numbers");
  coh_cmd->add_option("FILE", file, "Structure file, '-' or catalog name")->required();
  coh_cmd->add_flag("--reps", reps, "Print cocycle representatives");
  coh_cmd->add_option("--max-degree", max_degree, "Compute degrees 0..D only");
  coh_cmd->add_option("--max-dim", max_dim, "Refuse algebras above this dimension (hard limit 24)")
      ->check(CLI::Range(1, 24));
  add_format(coh_cmd);

  std::string complement, kill = "full", select;
  bool malcev = false;
  auto* split_cmd = app.add_subcommand("split", "Kill part of the semisimple action of V on n");
  split_cmd->add_option("FILE", file, "Structure file, '-' or catalog name")->required();
  split_cmd->add_option("--complement", complement, "1-based basis indices spanning V, e.g. 1,2")->required();
  split_cmd->add_option("--kill", kill, "full|compact|selected")->check(CLI::IsMember({"full", "compact", "selected"}));
  split_cmd->add_option("--select", select,
                        "For --kill selected: 1-based compact component indices per V vector, groups split by ';'");
  split_cmd->add_flag("--malcev", malcev, "Print the Malcev splitting V (+) g instead");

  std::string holonomy, derivation, scale = "1";
  auto* aa_cmd = app.add_subcommand("almost-abelian", "Lattices in R x| R^n");
  aa_cmd->add_option("--holonomy", holonomy, "Matrix file with the integer holonomy B");
  aa_cmd->add_option("--derivation", derivation, "Matrix file with a rational derivation Z");
  aa_cmd->add_option("--scale", scale, "Z generates exp(tZ) (1) or exp(t pi Z) (pi)")
      ->check(CLI::IsMember({"1", "pi"}));
  add_format(aa_cmd);

  std::string name;
  auto* cat_cmd = app.add_subcommand("catalog", "List built-in algebras or print one as a structure file");
  cat_cmd->add_option("NAME", name, "Catalog entry");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = fmt_name == "tsv" ? Format::Tsv : Format::Plain;
  try {
    if (*validate_cmd) return cmd_validate(file, out, err, in);
    if (*info_cmd) return cmd_info(file, fmt, out, in);
    if (*coh_cmd) return cmd_cohomology(file, reps, max_degree, max_dim, fmt, out, err, in);
    if (*split_cmd) return cmd_split(file, complement, kill, select, malcev, out, in);
    if (*aa_cmd) return cmd_almost_abelian(holonomy, derivation, scale, fmt, out, in);
    if (*cat_cmd) return cmd_catalog(name, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMath;
  }
  return kExitUsage;
}

}  // namespace solvco
