#include "fmb/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fmb/catalog.hpp"
#include "fmb/certificate.hpp"
#include "fmb/constructions.hpp"
#include "fmb/error.hpp"
#include "fmb/jennings.hpp"
#include "fmb/obstruction.hpp"
#include "fmb/search.hpp"

namespace fmb {
namespace {

Field parse_field_arg(const std::string& arg) {
  int p = 0, k = 1;
  std::vector<int> modulus;
  std::stringstream ss(arg);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.rfind("p=", 0) == 0) {
      p = std::stoi(part.substr(2));
    } else if (part.rfind("k=", 0) == 0) {
      k = std::stoi(part.substr(2));
    } else if (part.rfind("mod=", 0) == 0) {
      std::stringstream ms(part.substr(4));
      std::string c;
      while (std::getline(ms, c, '.')) modulus.push_back(std::stoi(c));
    } else {
      fail("BadParams", "unrecognized field component '" + part + "'");
    }
  }
  if (p == 0) fail("BadParams", "field needs p=<prime>");
  return modulus.empty() ? field_make(p, k) : field_make(p, k, &modulus);
}

struct GroupArgs {
  std::string name;
  std::string file;
  CatalogParams params;

  Group build() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) fail("ParseError", "cannot open group file '" + file + "'");
      std::vector<std::string> lines;
      std::string line;
      while (std::getline(in, line)) lines.push_back(line);
      return group_from_spec(parse_group_text(lines, file));
    }
    return group_from_spec(catalog_lookup(name, params));
  }
};

void add_group_options(CLI::App* cmd, GroupArgs& ga) {
  cmd->add_option("group", ga.name, "catalog label, e.g. D8, G_49, 'D8 x C2', H_1");
  cmd->add_option("--group-file", ga.file, "pc-presentation text file");
  cmd->add_option("--n", ga.params.n, "family parameter n");
  cmd->add_option("--m", ga.params.m, "family parameter m");
  cmd->add_option("--p", ga.params.p, "family parameter p");
}

long long budget_default(long long fallback) {
  if (const char* env = std::getenv("FMB_BUDGET")) return std::atoll(env);
  return fallback;
}

int cmd_catalog() {
  for (const auto& name : catalog_names()) {
    Group g = group_from_spec(catalog_lookup(name));
    std::cout << name << "  order " << g.order() << "\n";
  }
  return 0;
}

int cmd_dims(const GroupArgs& ga, const std::string& field_arg) {
  Group g = ga.build();
  Field f = parse_field_arg(field_arg);
  Filtration filt = radical_filtration(g, f);
  auto prof = jennings_profile(g, f.p());
  std::cout << "group " << g.spec().name << "  order " << g.order() << "  over " << f.label()
            << "\n";
  for (size_t i = 0; i < prof.dims.size(); ++i) {
    std::cout << "layer " << i + 1 << ": d=" << prof.dims[i] << " reps";
    for (Elt r : prof.layers[i]) std::cout << " " << g.describe(r);
    std::cout << "\n";
  }
  for (int t = 1; t <= filt.s; ++t)
    std::cout << "dim A^" << t << "/A^" << t + 1 << " = " << filt.dim_layer(t) << "\n";
  std::cout << "nilpotency length s = " << filt.s << "\n";
  auto rep = jennings_crosscheck(g, f, filt, prof);
  std::cout << (rep.pass ? "crosscheck: pass" : "crosscheck: FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_profile(const GroupArgs& ga, const std::string& field_arg) {
  Group g = ga.build();
  Field f = parse_field_arg(field_arg);
  auto prof = jennings_profile(g, f.p());
  std::cout << "group " << g.spec().name << "  order " << g.order() << "\n";
  for (size_t r = 0; r < prof.reps.size(); ++r)
    std::cout << "u_" << prof.weights[r] << "," << r + 1 << " = " << g.describe(prof.reps[r])
              << "  weight " << prof.weights[r] << "\n";
  std::cout << "weight sum " << prof.weightsum << "\n";
  return 0;
}

int cmd_construct(const GroupArgs& ga, const std::string& field_arg, const std::string& out,
                  long long budget) {
  Group g = ga.build();
  Field f = parse_field_arg(field_arg);
  Filtration filt = radical_filtration(g, f);
  BasisCandidate cand = construct_for(ga.name, g, f, budget);
  auto rep = verify_fm_basis(g, f, filt, cand);
  if (!rep.is_basis) {
    std::cerr << "constructed candidate failed verification\n" << rep.summary();
    return 1;
  }
  if (!out.empty()) cert_write(out, make_certificate(g, f, cand, !ga.file.empty()));
  std::cout << "verified filtered multiplicative basis for " << g.spec().name << " over "
            << f.label() << "\n";
  return 0;
}

int cmd_verify(const std::string& path) {
  Certificate cert = cert_read(path);
  Group g = cert_group(cert);
  Filtration filt = radical_filtration(g, cert.field);
  auto rep = verify_fm_basis(g, cert.field, filt, cert.basis);
  std::cout << rep.summary();
  return rep.is_basis ? 0 : 1;
}

int cmd_search(const GroupArgs& ga, const std::string& field_arg, long long budget,
               bool exhaustive, int depth, int jobs, const std::string& out) {
  (void)jobs;
  Group g = ga.build();
  Field f = parse_field_arg(field_arg);
  SearchConfig cfg;
  cfg.max_nodes = budget;
  cfg.exhaustive = exhaustive;
  cfg.correction_depth = depth;
  auto res = dfs_search(g, f, cfg);
  std::cout << "nodes " << res.nodes << "\n";
  switch (res.status) {
    case SearchStatus::Found: {
      std::cout << "found a verified basis\n";
      if (!out.empty()) cert_write(out, make_certificate(g, f, res.candidate, !ga.file.empty()));
      return 0;
    }
    case SearchStatus::NotFoundComplete:
      std::cout << "no basis found; " << res.note
                << (res.complete ? " (covers every possible basis)" : "") << "\n";
      return 1;
    case SearchStatus::BudgetExhausted:
      std::cout << res.note << "\n";
      return 3;
  }
  return 2;
}

int cmd_obstruct(const GroupArgs& ga, const std::string& field_arg, int m, long long budget,
                 int jobs, const std::string& out) {
  Group g = ga.build();
  Field f = parse_field_arg(field_arg);
  auto rep = obstruct(g, f, m, budget, jobs);
  std::cout << rep.render();
  if (!out.empty()) {
    std::ofstream o(out);
    o << rep.render();
    for (const auto& v : rep.verdicts) {
      o << "matrix " << v.index << " ";
      if (v.survived)
        o << "survived" << v.note << "\n";
      else
        o << "eliminated grade " << v.eliminated_at << " " << v.kind << "\n";
    }
  }
  switch (rep.status) {
    case ObstructStatus::Certified:
      return 0;
    case ObstructStatus::Inconclusive:
      return 1;
    case ObstructStatus::BudgetExhausted:
      return 3;
  }
  return 2;
}

int cmd_selftest() {
  bool ok = true;
  for (const auto& name : catalog_names()) {
    Group g = group_from_spec(catalog_lookup(name));
    const int p = group_prime(g);
    std::vector<Field> fields{field_make(p, 1)};
    if (name.rfind("Q8", 0) == 0 || name == "G_26" || name == "G_47")
      fields.push_back(field_make(2, 2));
    for (const Field& f : fields) {
      Filtration filt = radical_filtration(g, f);
      auto prof = jennings_profile(g, p);
      bool pass = jennings_crosscheck(g, f, filt, prof).pass;
      // Unit identity (y-1)(x-1) = [(x-1)(y-1)+(x-1)+(y-1)](z-1)+(x-1)(y-1)+(z-1).
      for (Elt x = 1; x < g.order() && pass; x = static_cast<Elt>(x + 3)) {
        for (Elt y = 2; y < g.order() && pass; y = static_cast<Elt>(y + 5)) {
          Elt z = commutator(g, y, x);
          Vec xm = elem_minus_one(g, f, x), ym = elem_minus_one(g, f, y),
              zm = elem_minus_one(g, f, z);
          Vec lhs = alg_mul(g, f, ym, xm);
          Vec bracket = vec_add(f, alg_mul(g, f, xm, ym), vec_add(f, xm, ym));
          Vec rhs = vec_add(f, alg_mul(g, f, bracket, zm), vec_add(f, alg_mul(g, f, xm, ym), zm));
          pass = lhs == rhs;
        }
      }
      // Lazard terms equal the dimension subgroups.
      if (pass) {
        auto chain = lazard_series(g, p);
        for (int n = 1; n <= filt.s + 1 && pass; ++n) {
          auto dn = dimension_subgroup(g, filt, n);
          auto mn = n <= static_cast<int>(chain.terms.size()) ? chain.terms[n - 1]
                                                              : std::vector<Elt>{0};
          pass = dn == mn;
        }
      }
      std::cout << (pass ? "pass " : "FAIL ") << name << " / " << f.label() << "\n";
      ok = ok && pass;
    }
  }
  std::cout << (ok ? "selftest: pass" : "selftest: FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"filtered multiplicative bases in modular group algebras of small p-groups"};
  app.require_subcommand(1);

  auto* c_catalog = app.add_subcommand("catalog", "list the group catalog");

  GroupArgs dims_g;
  std::string dims_field = "p=2";
  auto* c_dims = app.add_subcommand("dims", "layer dimensions and the Jennings crosscheck");
  add_group_options(c_dims, dims_g);
  c_dims->add_option("--field", dims_field, "field, e.g. p=2 or p=2,k=2");

  GroupArgs prof_g;
  std::string prof_field = "p=2";
  auto* c_prof = app.add_subcommand("profile", "Jennings representatives and weights");
  add_group_options(c_prof, prof_g);
  c_prof->add_option("--field", prof_field, "field");

  GroupArgs cons_g;
  std::string cons_field = "p=2", cons_out;
  long long cons_budget = budget_default(100'000'000);
  auto* c_cons = app.add_subcommand("construct", "build and verify a catalog basis");
  add_group_options(c_cons, cons_g);
  c_cons->add_option("--field", cons_field, "field");
  c_cons->add_option("--out", cons_out, "certificate output path");
  c_cons->add_option("--budget", cons_budget, "search budget for search-backed recipes");

  std::string verify_path;
  auto* c_verify = app.add_subcommand("verify", "check a basis certificate");
  c_verify->add_option("certificate", verify_path)->required();

  GroupArgs search_g;
  std::string search_field = "p=2", search_out;
  long long search_budget = budget_default(10'000'000);
  bool search_exhaustive = false;
  int search_depth = 2, search_jobs = 1;
  auto* c_search = app.add_subcommand("search", "depth-first search for a basis");
  add_group_options(c_search, search_g);
  c_search->add_option("--field", search_field, "field");
  c_search->add_option("--budget", search_budget, "node budget");
  c_search->add_flag("--exhaustive", search_exhaustive, "corrections through grade s-1");
  c_search->add_option("--depth", search_depth, "correction depth (grades 2..1+depth)");
  c_search->add_option("--jobs", search_jobs, "worker cap");
  c_search->add_option("--out", search_out, "certificate output path");

  GroupArgs obs_g;
  std::string obs_field = "p=2", obs_out;
  int obs_m = 4, obs_jobs = 1;
  long long obs_budget = budget_default(10'000'000);
  auto* c_obs = app.add_subcommand("obstruct", "non-existence certification by enumeration");
  add_group_options(c_obs, obs_g);
  c_obs->add_option("--field", obs_field, "field");
  c_obs->add_option("--trunc", obs_m, "truncation level m");
  c_obs->add_option("--budget", obs_budget, "configuration budget");
  c_obs->add_option("--jobs", obs_jobs, "worker cap");
  c_obs->add_option("--out", obs_out, "report output path");

  auto* c_self = app.add_subcommand("selftest", "catalog-wide consistency checks");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    CLI::App dummy;
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_catalog->parsed()) return cmd_catalog();
    if (c_dims->parsed()) return cmd_dims(dims_g, dims_field);
    if (c_prof->parsed()) return cmd_profile(prof_g, prof_field);
    if (c_cons->parsed()) return cmd_construct(cons_g, cons_field, cons_out, cons_budget);
    if (c_verify->parsed()) return cmd_verify(verify_path);
    if (c_search->parsed())
      return cmd_search(search_g, search_field, search_budget, search_exhaustive, search_depth,
                        search_jobs, search_out);
    if (c_obs->parsed()) return cmd_obstruct(obs_g, obs_field, obs_m, obs_budget, obs_jobs, obs_out);
    if (c_self->parsed()) return cmd_selftest();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == "BudgetExhausted") return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fmb
