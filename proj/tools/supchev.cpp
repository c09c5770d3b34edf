// Command-line surface for the exact Chevalley superalgebra/supergroup kit:
// root data, basis construction and certification, PBW normalization,
// group-word arithmetic and factorization, lattice checks, and the
// acceptance selftest.
#include <CLI11.hpp>

#include "supchev/selftest.hpp"

#include <fstream>
#include <iostream>

using namespace supchev;

namespace {

struct Common {
  std::string format = "text";
  int ngens = 6;
  std::uint64_t seed = 1;
  bool json() const { return format == "json"; }
};

int fail(const Common& c, const std::string& what, int code = 2) {
  if (c.json())
    std::cout << "{\n  \"error\": \"" << what << "\"\n}\n";
  else
    std::cerr << "error: " << what << "\n";
  return code;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModuleRep make_module(const ChevalleyBasis& cb, const std::string& which) {
  if (which == "adjoint" || !cb.has_matrices()) return ModuleRep::make_adjoint(cb);
  return ModuleRep::defining(cb);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"supchev: exact Chevalley bases, Kostant Z-form and Chevalley supergroups"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  if (const char* env = std::getenv("SUPCHEV_NGENS")) common.ngens = std::atoi(env);
  app.add_option("--format", common.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--ngens", common.ngens, "number of Grassmann generators (default 6)");
  app.add_option("--seed", common.seed, "seed for randomized suites");

  std::string family, expr, module = "defining", path;
  bool verbose = false;

  auto* roots = app.add_subcommand("roots", "print the root datum of a family");
  roots->add_option("family", family)->required();

  auto* basis = app.add_subcommand("basis", "print the Chevalley basis");
  basis->add_option("family", family)->required();

  auto* verify = app.add_subcommand("verify", "mechanically verify the basis axioms");
  verify->add_option("family", family)->required();
  verify->add_flag("--verbose", verbose, "list every checked pair");

  auto* constants = app.add_subcommand("constants", "print the structure constant table");
  constants->add_option("family", family)->required();

  auto* pbw = app.add_subcommand("pbw", "normalize a Kostant expression to PBW order");
  pbw->add_option("expr", expr)->required();
  pbw->add_option("--family", family)->required();

  auto* gmul = app.add_subcommand("group-mul", "multiply a group word into one matrix");
  gmul->add_option("wordfile", path, "word file ('-' for stdin)")->required();
  gmul->add_option("--family", family)->required();
  gmul->add_option("--module", module)->check(CLI::IsMember({"defining", "adjoint"}));

  auto* gfac = app.add_subcommand("group-factor", "factor a group word into g0 g1- g1+");
  gfac->add_option("wordfile", path, "word file ('-' for stdin)")->required();
  gfac->add_option("--family", family)->required();
  gfac->add_option("--module", module)->check(CLI::IsMember({"defining", "adjoint"}));

  auto* lat = app.add_subcommand("lattice-check", "admissibility and stabilizer checks");
  lat->add_option("--family", family)->required();
  lat->add_option("--module", module)->check(CLI::IsMember({"defining", "adjoint"}));

  auto* lie = app.add_subcommand("lie-check", "dual-number Lie functor check");
  lie->add_option("--family", family)->required();
  lie->add_option("--module", module)->check(CLI::IsMember({"defining", "adjoint"}));

  auto* self = app.add_subcommand("selftest", "run the full acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    GrRing ring{common.ngens, -1};
    if (roots->parsed()) {
      auto rd = RootDatum::build(Family::parse(family));
      std::cout << (common.json() ? roots_json(rd) : roots_text(rd)) << "\n";
      return 0;
    }
    if (basis->parsed()) {
      auto cb = ChevalleyBasis::build(Family::parse(family));
      std::cout << basis_json(cb) << "\n";
      return 0;
    }
    if (verify->parsed()) {
      auto cb = ChevalleyBasis::build(Family::parse(family));
      auto rep = cb.verify();
      std::cout << (common.json() ? verify_json(cb, rep, verbose) : verify_text(rep, verbose))
                << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (constants->parsed()) {
      auto cb = ChevalleyBasis::build(Family::parse(family));
      if (common.json()) {
        std::cout << constants_json(cb) << "\n";
      } else {
        const auto& rd = cb.root_datum();
        for (auto& [a, b, c] : cb.structure_constants())
          if (c != 0)
            std::cout << "c(" << rd.root(a).label << "," << rd.root(b).label << ") = " << c
                      << "\n";
      }
      return 0;
    }
    if (pbw->parsed()) {
      auto cb = ChevalleyBasis::build(Family::parse(family));
      Kostant K(cb);
      auto e = parse_kostant_expr(expr, K);
      NormStats st;
      auto r = K.normalize(e, &st);
      if (common.json()) std::cout << kostant_json(K, r) << "\n";
      else
        std::cout << K.element_str(r) << "\n"
                  << "# moves " << st.moves << ", integral "
                  << (K.integrality_witness(r) ? "no" : "yes") << "\n";
      return 0;
    }
    if (gmul->parsed() || gfac->parsed()) {
      auto cb = ChevalleyBasis::build(Family::parse(family));
      auto mod = make_module(cb, module);
      Supergroup G(mod, ring);
      auto w = parse_word_file(slurp(path), cb, ring);
      if (gmul->parsed()) {
        std::cout << matrix_json(G.word_to_matrix(w)) << "\n";
      } else {
        auto nf = G.factorize(w);
        std::cout << normal_form_json(G, nf) << "\n";
      }
      return 0;
    }
    if (lat->parsed()) {
      auto cb = ChevalleyBasis::build(Family::parse(family));
      auto mod = make_module(cb, module);
      auto M = QMatrix::identity(mod.dimV, Scalar(1));
      auto res = admissible_check(mod, M);
      auto st = stabilizer_cartan(mod);
      bool split = res.ok && weight_split_check(mod, M);
      if (common.json()) {
        std::ostringstream os;
        os << "{\n  \"family\": \"" << cb.family().str() << "\",\n  \"module\": \""
           << (mod.adjoint ? "adjoint" : "defining") << "\",\n  \"standard_lattice_admissible\": "
           << (res.ok ? "true" : "false") << ",\n  \"witness\": \"" << res.witness
           << "\",\n  \"weight_split\": " << (split ? "true" : "false")
           << ",\n  \"stabilizer_index_over_hz\": \"" << st.index_over_hz.str() << "\"\n}";
        std::cout << os.str() << "\n";
      } else {
        std::cout << "standard lattice admissible: " << (res.ok ? "yes" : "no") << "\n";
        if (!res.ok) std::cout << "witness: " << res.witness << "\n";
        if (res.ok) std::cout << "weight-component split: " << (split ? "yes" : "no") << "\n";
        std::cout << "[h_V : h_Z] = " << st.index_over_hz << "\n";
      }
      return res.ok ? 0 : 1;
    }
    if (lie->parsed()) {
      auto cb = ChevalleyBasis::build(Family::parse(family));
      auto mod = make_module(cb, module);
      Supergroup G(mod, GrRing{2, -1});
      auto rep = G.lie_functor();
      if (common.json())
        std::cout << "{\n  \"kernel_ok\": " << (rep.kernel_ok ? "true" : "false")
                  << ",\n  \"brackets_ok\": " << (rep.brackets_ok ? "true" : "false")
                  << ",\n  \"brackets_checked\": " << rep.brackets_checked << "\n}\n";
      else
        std::cout << "kernel: " << (rep.kernel_ok ? "ok" : "FAIL") << "\n"
                  << "bracket table (" << rep.brackets_checked
                  << " pairs): " << (rep.brackets_ok ? "ok" : "FAIL") << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (self->parsed()) {
      SelftestOptions opts{common.seed, common.ngens};
      auto results = run_acceptance(opts);
      bool all = true;
      if (common.json()) {
        std::ostringstream os;
        os << "{\n  \"criteria\": [\n";
        for (size_t i = 0; i < results.size(); ++i) {
          auto& r = results[i];
          all = all && r.pass;
          os << "    {\"id\": " << r.id << ", \"name\": \"" << r.name << "\", \"pass\": "
             << (r.pass ? "true" : "false") << ", \"seconds\": " << r.seconds << "}"
             << (i + 1 < results.size() ? "," : "") << "\n";
        }
        os << "  ],\n  \"pass\": ";
        os << (all ? "true" : "false") << "\n}";
        std::cout << os.str() << "\n";
      } else {
        for (auto& r : results) {
          all = all && r.pass;
          std::printf("[%s] criterion %2d: %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id,
                      r.name.c_str(), r.seconds, r.detail.c_str());
        }
        std::cout << (all ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << "\n";
      }
      return all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    return fail(common, e.what());
  } catch (const std::exception& e) {
    return fail(common, e.what());
  }
  return 2;
}
