// Command-line front end: constructs Drinfeld doubles and their module
// categories, searches for inner-faithful sums, builds and checks the built-in
// algebra families, and runs the invariant-theory computations.
#include "CLI11.hpp"
#include "json.hpp"

#include "qd/config.hpp"
#include "qd/double_ore.hpp"
#include "qd/faithful.hpp"
#include "qd/fusion.hpp"
#include "qd/invariants.hpp"
#include "qd/koszul.hpp"

#include <iostream>
#include <random>
#include <sstream>

using namespace qd;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

struct Options {
  std::string format = "table";
  int degree = -1;
  std::string params;
  unsigned long seed = 12345;
};

bool use_json(const Options& o) { return o.format == "json"; }

json json_header(const std::string& command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::vector<std::string> tensor_basis_names(int dim_left, int dim_right) {
  static const char* base[4] = {"u", "v", "p", "q"};
  auto nm = [&](int k, int dim) {
    return dim <= 4 ? std::string(base[k]) : "e" + std::to_string(k);
  };
  std::vector<std::string> out;
  for (int i = 0; i < dim_left; ++i)
    for (int j = 0; j < dim_right; ++j) out.push_back(nm(i, dim_left) + "." + nm(j, dim_right));
  return out;
}

std::string vec_str(const Vec& v, const std::vector<std::string>& names) {
  NcPoly p;
  for (size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) poly_add_term(p, Word(1, static_cast<char>(k)), v[k]);
  return poly_str(p, names);
}

int cmd_simples(const std::string& label, const Options& opt) {
  FiniteGroup G = JobConfig::group_from_label(label);
  auto S = simples(G);
  const auto& classes = G.conjugacy_classes();
  if (use_json(opt)) {
    json j = json_header("simples");
    j["group"] = G.label();
    j["count"] = S.size();
    json rows = json::array();
    for (const auto& M : S) {
      json r;
      r["index"] = M.index;
      r["class"] = G.name(M.rep);
      r["centralizer_order"] = classes[M.class_index].centralizer.size();
      r["irrep"] = M.irrep_name;
      r["dim"] = M.dim;
      json grades = json::array();
      for (int g : M.grade) grades.push_back(G.name(g));
      r["grades"] = grades;
      rows.push_back(std::move(r));
    }
    j["simples"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "simple D(" << G.label() << ")-modules: " << S.size() << "\n";
    std::cout << "index  class  |C(a)|  irrep  dim  grades\n";
    for (const auto& M : S) {
      std::cout << "V" << M.index << "  [" << G.name(M.rep) << "]  "
                << classes[M.class_index].centralizer.size() << "  " << M.irrep_name << "  "
                << M.dim << "  ";
      for (int k = 0; k < M.dim; ++k) std::cout << (k ? "," : "") << G.name(M.grade[k]);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_fuse(const std::string& label, int a, int b, const Options& opt) {
  FiniteGroup G = JobConfig::group_from_label(label);
  auto S = simples(G);
  if (a < 0 || b < 0 || a >= static_cast<int>(S.size()) || b >= static_cast<int>(S.size()))
    throw std::invalid_argument("simple index out of range");
  Module W = tensor(G, as_module(S[a]), as_module(S[b]));
  Decomposition d = decompose(G, S, W);
  std::vector<std::string> names = tensor_basis_names(S[a].dim, S[b].dim);

  std::string summary;
  for (const auto& c : d.copies)
    summary += (summary.empty() ? "V" : " + V") + std::to_string(c.simple_index);
  if (use_json(opt)) {
    json j = json_header("fuse");
    j["group"] = G.label();
    j["tensor"] = {a, b};
    j["summary"] = summary;
    json copies = json::array();
    for (const auto& c : d.copies) {
      json e;
      e["simple"] = c.simple_index;
      json gens = json::array();
      for (const auto& row : c.images) gens.push_back(vec_str(row, names));
      e["generators"] = gens;
      copies.push_back(std::move(e));
    }
    j["copies"] = std::move(copies);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "V" << a << " (x) V" << b << " = " << summary << "\n";
    for (const auto& c : d.copies) {
      std::cout << "  V" << c.simple_index << ":\n";
      for (const auto& row : c.images) std::cout << "    " << vec_str(row, names) << "\n";
    }
  }
  return 0;
}

int cmd_smatrix(const std::string& label, const Options& opt) {
  FiniteGroup G = JobConfig::group_from_label(label);
  auto S = simples(G);
  Mat Sm = s_matrix(G, S);
  if (use_json(opt)) {
    json j = json_header("smatrix");
    j["group"] = G.label();
    json rows = json::array();
    for (const auto& row : Sm) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.str());
      rows.push_back(std::move(r));
    }
    j["s_matrix"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else {
    for (size_t p = 0; p < Sm.size(); ++p) {
      std::cout << "V" << p << ":";
      for (const auto& x : Sm[p]) std::cout << "  " << x.str();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_faithful(const std::string& label, const Options& opt) {
  FiniteGroup G = JobConfig::group_from_label(label);
  Census c = minimal_inner_faithful(fusion_table(G));
  auto sum_str = [](const std::vector<int>& s) {
    std::string out;
    for (int v : s) out += (out.empty() ? "V" : "+V") + std::to_string(v);
    return out;
  };
  if (use_json(opt)) {
    json j = json_header("faithful-search");
    j["group"] = G.label();
    j["k_min"] = c.k_min;
    j["multiset_count"] = c.multiset_count;
    j["set_count"] = c.set_count;
    j["conventions_agree"] = c.conventions_agree;
    json sums = json::array();
    for (const auto& s : c.sums) sums.push_back(sum_str(s));
    j["sums"] = std::move(sums);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "minimal inner-faithful sums over D(" << G.label() << ")\n";
    std::cout << "k_min = " << c.k_min << "\n";
    std::cout << "count (multisets) = " << c.multiset_count << "\n";
    std::cout << "count (sets)      = " << c.set_count
              << (c.conventions_agree ? "  (conventions agree)" : "") << "\n";
    for (const auto& s : c.sums) std::cout << "  " << sum_str(s) << "\n";
  }
  return 0;
}

JobConfig load_config(const std::string& path, const Options& opt) {
  JobConfig cfg = JobConfig::parse_file(path);
  if (!opt.params.empty()) cfg.override_params(opt.params);
  return cfg;
}

json doe_stage_json(const DOEData& d) {
  json stage;
  json base = json::array();
  for (const auto& rel : d.base.relations) base.push_back(d.base.str(rel));
  stage["base_generators"] = d.base.gen_names;
  stage["base_relations"] = std::move(base);
  stage["p"] = d.p.str();
  json sig;
  for (int k = 0; k < d.base.gen_count(); ++k) {
    json m = json::array();
    for (int e = 0; e < 4; ++e) m.push_back(d.base.str(d.sigma[k][e]));
    sig[d.base.gen_names[k]] = std::move(m);
  }
  stage["sigma"] = std::move(sig);
  return stage;
}

void print_doe_stage(const std::string& label, const DOEData& d) {
  std::cout << label << ": base <";
  for (size_t k = 0; k < d.base.gen_names.size(); ++k)
    std::cout << (k ? "," : "") << d.base.gen_names[k];
  std::cout << ">, p = " << d.p.str() << "\n";
  for (int k = 0; k < d.base.gen_count(); ++k) {
    std::cout << "  sigma(" << d.base.gen_names[k] << ") = [[" << d.base.str(d.sigma[k][0])
              << ", " << d.base.str(d.sigma[k][1]) << "], [" << d.base.str(d.sigma[k][2]) << ", "
              << d.base.str(d.sigma[k][3]) << "]]\n";
  }
}

int cmd_algebra_build(const std::string& path, const Options& opt) {
  JobConfig cfg = load_config(path, opt);
  AlgebraPresentation B = cfg.algebra();
  std::string fam = cfg.algebra_family();
  bool is_d4 = fam == "D4" || fam == "d4";
  bool is_d8 = fam == "D8" || fam == "d8";
  if (use_json(opt)) {
    json j = json_header("algebra-build");
    j["family"] = cfg.algebra_family();
    json gens = json::array();
    for (int g = 0; g < B.gen_count(); ++g) {
      json e;
      e["name"] = B.gen_names[g];
      e["grade"] = B.group->name(B.gen_grade[g]);
      gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    json rels = json::array();
    for (const auto& r : B.relations) rels.push_back(B.str(r));
    j["relations"] = std::move(rels);
    if (is_d4) {
      j["double_ore"] = json::array({doe_stage_json(d4_doe_data(cfg.params()))});
    } else if (is_d8) {
      D8Stages st = d8_doe_stages(cfg.params());
      j["double_ore"] =
          json::array({doe_stage_json(st.stage1), doe_stage_json(st.stage2), doe_stage_json(st.stage3)});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "generators (grade):";
    for (int g = 0; g < B.gen_count(); ++g)
      std::cout << " " << B.gen_names[g] << "(" << B.group->name(B.gen_grade[g]) << ")";
    std::cout << "\nrelations:\n";
    for (const auto& r : B.relations) std::cout << "  " << B.str(r) << "\n";
    if (is_d4) {
      print_doe_stage("double Ore data", d4_doe_data(cfg.params()));
    } else if (is_d8) {
      D8Stages st = d8_doe_stages(cfg.params());
      print_doe_stage("stage 1", st.stage1);
      print_doe_stage("stage 2", st.stage2);
      print_doe_stage("stage 3", st.stage3);
    }
  }
  return 0;
}

int cmd_algebra_check(const std::string& path, const Options& opt) {
  JobConfig cfg = load_config(path, opt);
  std::string fam = cfg.algebra_family();
  AlgebraPresentation B = cfg.algebra();
  FamilyParams pp = cfg.params();
  bool is_d4 = fam == "D4" || fam == "d4";
  bool is_d8 = fam == "D8" || fam == "d8";

  struct Item {
    std::string name;
    std::string status;  // pass | fail | skipped | reported
    std::string detail;
  };
  std::vector<Item> items;
  auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
    items.push_back({name, ok ? "pass" : "fail", detail});
  };

  add("relations-form-a-submodule", relation_submodule_check(B));

  if (is_d4) {
    DOEData d = d4_doe_data(pp);
    add("sigma-is-algebra-map", sigma_is_algebra_map(d));
    add("sigma-invertible", sigma_invertible(d));
    add("double-ore-conditions", do_conditions(d));
  } else if (is_d8) {
    D8Stages st = d8_doe_stages(pp);
    bool ok = true;
    for (const DOEData* d : {&st.stage1, &st.stage2, &st.stage3})
      ok = ok && sigma_is_algebra_map(*d) && sigma_invertible(*d) && do_conditions(*d);
    add("iterated-double-ore-stages", ok);
  } else {
    items.push_back({"double-ore-conditions", "skipped", "only the D4/D8 families are extensions"});
  }

  int deg = opt.degree > 0 ? opt.degree : cfg.degree_limit(is_d8 ? 5 : 6);
  std::vector<long> h = hilbert_coeffs(B, deg);
  std::vector<long> want(deg + 1);
  int n = B.gen_count();
  want[0] = 1;
  for (int d = 1; d <= deg; ++d) want[d] = want[d - 1] * (n - 1 + d) / d;
  std::string detail = "computed:";
  for (long v : h) detail += " " + std::to_string(v);
  if (is_d4 || is_d8) {
    add("hilbert-series-(1-t)^-" + std::to_string(n) + "-through-degree-" + std::to_string(deg),
        h == want, detail);
  } else {
    items.push_back({"hilbert-series", "reported", detail});
  }

  if (is_d4 || is_d8) {
    KoszulData kd = koszul_analyze(B);
    add("koszul-dual-top-dimension-one", kd.top_dim == 1,
        "dim B!_" + std::to_string(kd.n) + " = " + std::to_string(kd.top_dim));
    if (kd.top_dim == 1) {
      Superpotential sp = superpotential(B, kd);
      add("superpotential-identity-grade", sp.grade_trivial,
          std::to_string(sp.w.terms.size()) + " monomials");
    }
  } else {
    items.push_back({"superpotential-identity-grade", "skipped",
                     "no regularity claim for this family"});
    // the S3 candidates exist to exhibit zero divisors; sample a few products
    GroebnerBasis gb = groebner(B, 6);
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> letter(0, 2), coef(-2, 2);
    int witnesses = 0;
    for (int rep = 0; rep < 50; ++rep) {
      NcPoly f, g;
      for (int t = 0; t < 2; ++t) {
        poly_add_term(f, Word(1, static_cast<char>(letter(rng))), Cyclotomic(coef(rng)));
        poly_add_term(g, Word(1, static_cast<char>(letter(rng))), Cyclotomic(coef(rng)));
      }
      if (f.is_zero() || g.is_zero()) continue;
      if (!normal_form(f, gb).is_zero() && !normal_form(g, gb).is_zero() &&
          zero_divisor_witness(f, g, gb))
        ++witnesses;
    }
    items.push_back({"zero-divisor-sampling", "reported",
                     std::to_string(witnesses) + " witnesses in 50 degree-one pairs"});
  }

  bool all_ok = true;
  for (const auto& it : items)
    if (it.status == "fail") all_ok = false;

  if (use_json(opt)) {
    json j = json_header("algebra-check");
    j["family"] = fam;
    j["ok"] = all_ok;
    json arr = json::array();
    for (const auto& it : items) {
      json e;
      e["check"] = it.name;
      e["status"] = it.status;
      if (!it.detail.empty()) e["detail"] = it.detail;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& it : items) {
      std::cout << (it.status == "pass" ? "PASS" : it.status == "fail" ? "FAIL" : "----") << "  "
                << it.name;
      if (!it.detail.empty()) std::cout << "  [" << it.detail << "]";
      std::cout << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "CHECK FAILURES") << "\n";
  }
  return all_ok ? 0 : 1;
}

int cmd_superpotential(const std::string& path, const Options& opt, long limit) {
  JobConfig cfg = load_config(path, opt);
  AlgebraPresentation B = cfg.algebra();
  KoszulData kd = koszul_analyze(B);
  Superpotential sp = superpotential(B, kd);
  if (use_json(opt)) {
    json j = json_header("superpotential");
    j["family"] = cfg.algebra_family();
    j["theta"] = word_str(kd.theta, kd.dual.gen_names);
    j["grade_trivial"] = sp.grade_trivial;
    j["terms"] = sp.w.terms.size();
    json arr = json::array();
    long count = 0;
    for (const auto& [w, c] : sp.w.terms) {
      if (limit > 0 && count++ >= limit) break;
      json e;
      e["monomial"] = word_str(w, B.gen_names);
      e["coefficient"] = c.str();
      arr.push_back(std::move(e));
    }
    j["monomials"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "theta = " << word_str(kd.theta, kd.dual.gen_names) << "\n";
    std::cout << "identity group grade: " << (sp.grade_trivial ? "yes" : "NO") << "\n";
    std::cout << "terms: " << sp.w.terms.size() << "\n";
    long count = 0;
    for (const auto& [w, c] : sp.w.terms) {
      if (limit > 0 && count++ >= limit) break;
      std::cout << "  " << poly_str(poly_term(w, c), B.gen_names) << "\n";
    }
  }
  return 0;
}

int cmd_hdet(const std::string& path, const Options& opt) {
  JobConfig cfg = load_config(path, opt);
  AlgebraPresentation B = cfg.algebra();
  KoszulData kd = koszul_analyze(B);
  Superpotential sp = superpotential(B, kd);
  HdetReport rep = hdet(B, sp);
  if (use_json(opt)) {
    json j = json_header("hdet");
    j["family"] = cfg.algebra_family();
    j["grade_component_trivial"] = rep.grade_trivial;
    json vals;
    for (const auto& [g, v] : rep.values) vals[g] = v.str();
    j["values"] = std::move(vals);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group grade component: " << (rep.grade_trivial ? "trivial" : "NONTRIVIAL")
              << "\n";
    for (const auto& [g, v] : rep.values) std::cout << "hdet(" << g << ") = " << v.str() << "\n";
  }
  return 0;
}

int cmd_nakayama(const std::string& path, const Options& opt) {
  JobConfig cfg = load_config(path, opt);
  AlgebraPresentation B = cfg.algebra();
  KoszulData kd = koszul_analyze(B);
  Mat mu = nakayama(kd);
  if (use_json(opt)) {
    json j = json_header("nakayama");
    j["family"] = cfg.algebra_family();
    json rows = json::array();
    for (const auto& row : mu) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.str());
      rows.push_back(std::move(r));
    }
    j["matrix"] = std::move(rows);
    j["det"] = mat_det(mu).str();
    std::cout << j.dump(2) << "\n";
  } else {
    for (int i = 0; i < static_cast<int>(mu.size()); ++i) {
      std::cout << "mu(" << B.gen_names[i] << ") =";
      for (int k = 0; k < static_cast<int>(mu.size()); ++k)
        if (!mu[i][k].is_zero()) std::cout << " (" << mu[i][k].str() << ")*" << B.gen_names[k];
      std::cout << "\n";
    }
    std::cout << "det = " << mat_det(mu).str() << "\n";
  }
  return 0;
}

InvariantEngine engine_for(const JobConfig& cfg) {
  std::string fam = cfg.algebra_family();
  if (!(fam == "D4" || fam == "d4"))
    throw std::invalid_argument("invariants are implemented for the D4 family");
  return InvariantEngine(cfg.params());
}

int cmd_inv_basis(const std::string& path, const Options& opt, int degree) {
  JobConfig cfg = load_config(path, opt);
  InvariantEngine E = engine_for(cfg);
  int d = degree > 0 ? degree : (opt.degree > 0 ? opt.degree : cfg.degree_limit(4));
  auto basis = E.invariant_space(d);
  if (use_json(opt)) {
    json j = json_header("invariants-basis");
    j["degree"] = d;
    j["dim"] = basis.size();
    json arr = json::array();
    for (const auto& f : basis) arr.push_back(E.str(f));
    j["basis"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dim (B^{D(D_4)})_" << d << " = " << basis.size() << "\n";
    for (const auto& f : basis) std::cout << "  " << E.str(f) << "\n";
  }
  return 0;
}

int cmd_inv_generators(const std::string& path, const Options& opt, bool verify, int degree) {
  JobConfig cfg = load_config(path, opt);
  InvariantEngine E = engine_for(cfg);
  auto gens = E.minimal_generators();
  json j = json_header("invariants-generators");
  if (!use_json(opt)) {
    for (size_t k = 0; k < gens.size(); ++k)
      std::cout << "g" << (k + 1) << " = " << E.str(gens[k]) << "\n";
  } else {
    json arr = json::array();
    for (const auto& g : gens) arr.push_back(E.str(g));
    j["generators"] = std::move(arr);
  }
  int code = 0;
  if (verify) {
    int d = degree > 0 ? degree : (opt.degree > 0 ? opt.degree : 14);
    auto rep = E.verify_generator_theorem(d);
    code = rep.ok() ? 0 : 1;
    if (use_json(opt)) {
      j["verify"] = {{"degree", d},
                     {"ok", rep.ok()},
                     {"generators_invariant", rep.generators_invariant},
                     {"generation_ok", rep.generation_ok},
                     {"sagbi_ok", rep.sagbi_ok},
                     {"minimality_ok", rep.minimality_ok},
                     {"identities_ok", rep.identities_ok}};
      json gaps = json::array();
      for (const Expo& e : rep.lead_gaps) {
        json ge = json::array();
        for (int v : e) ge.push_back(v);
        gaps.push_back(std::move(ge));
      }
      j["verify"]["lead_gaps_certified_by_membership"] = std::move(gaps);
      json fails = json::array();
      for (const auto& f : rep.failures) fails.push_back(f);
      j["verify"]["failures"] = std::move(fails);
    } else {
      std::cout << "verification to degree " << d << ": " << (rep.ok() ? "PASS" : "FAIL") << "\n";
      std::cout << "  invariant+grade-e: " << rep.generators_invariant
                << "  generation: " << rep.generation_ok << "  lead-certificate: " << rep.sagbi_ok
                << "  minimality: " << rep.minimality_ok << "  identities: " << rep.identities_ok
                << "\n";
      for (const Expo& e : rep.lead_gaps) {
        std::cout << "  lead gap (certified by membership): (";
        for (int v : e) std::cout << v << ",";
        std::cout << ")\n";
      }
      for (const auto& f : rep.failures) std::cout << "  failure: " << f << "\n";
    }
  }
  if (use_json(opt)) std::cout << j.dump(2) << "\n";
  return code;
}

int cmd_inv_orbit_sum(const std::string& path, const Options& opt, const std::string& expo) {
  JobConfig cfg = load_config(path, opt);
  InvariantEngine E = engine_for(cfg);
  Expo a{};
  std::istringstream in(expo);
  std::string tok;
  int k = 0;
  while (std::getline(in, tok, ',') && k < 6) a[k++] = std::stoi(tok);
  if (k != 6) throw std::invalid_argument("--exponent needs six comma-separated entries");
  ExpPoly f = E.orbit_sum(a);
  if (use_json(opt)) {
    json j = json_header("invariants-orbit-sum");
    j["exponent"] = a;
    j["f"] = E.str(f);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "f = " << E.str(f) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld doubles of finite groups acting on quadratic algebras"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--degree", opt.degree, "degree bound override");
  app.add_option("--params", opt.params, "parameter overrides k=v,k=v");
  app.add_option("--seed", opt.seed, "seed for sampled checks");

  std::string group_label, cfg_path, exponent;
  int fuse_a = 0, fuse_b = 0, inv_degree = -1;
  long sp_limit = 0;
  bool verify = false;

  auto* simples_cmd = app.add_subcommand("simples", "list the simple D(G)-modules");
  simples_cmd->add_option("group", group_label)->required();

  auto* fuse_cmd = app.add_subcommand("fuse", "decompose V_i (x) V_j");
  fuse_cmd->add_option("group", group_label)->required();
  fuse_cmd->add_option("i", fuse_a)->required();
  fuse_cmd->add_option("j", fuse_b)->required();

  auto* smatrix_cmd = app.add_subcommand("smatrix", "S-matrix of the double");
  smatrix_cmd->add_option("group", group_label)->required();

  auto* faithful_cmd =
      app.add_subcommand("faithful-search", "census of minimal inner-faithful sums");
  faithful_cmd->add_option("group", group_label)->required();

  auto* algebra_cmd = app.add_subcommand("algebra", "build or check a presentation");
  algebra_cmd->require_subcommand(1);
  auto* build_cmd = algebra_cmd->add_subcommand("build", "print the presentation");
  build_cmd->add_option("config", cfg_path)->required();
  auto* check_cmd = algebra_cmd->add_subcommand("check", "aggregate verification report");
  check_cmd->add_option("config", cfg_path)->required();

  auto* sp_cmd = app.add_subcommand("superpotential", "twisted superpotential of the family");
  sp_cmd->add_option("config", cfg_path)->required();
  sp_cmd->add_option("--limit", sp_limit, "print at most this many monomials (0 = all)");

  auto* hdet_cmd = app.add_subcommand("hdet", "homological determinant of the action");
  hdet_cmd->add_option("config", cfg_path)->required();

  auto* nak_cmd = app.add_subcommand("nakayama", "Nakayama automorphism on degree one");
  nak_cmd->add_option("config", cfg_path)->required();

  auto* inv_cmd = app.add_subcommand("invariants", "invariant subring computations");
  inv_cmd->require_subcommand(1);
  auto* basis_cmd = inv_cmd->add_subcommand("basis", "basis of the degree-d invariants");
  basis_cmd->add_option("config", cfg_path)->required();
  basis_cmd->add_option("--degree", inv_degree);
  auto* gens_cmd = inv_cmd->add_subcommand("generators", "the seventeen generators");
  gens_cmd->add_option("config", cfg_path)->required();
  gens_cmd->add_flag("--verify", verify, "run the full generator-theorem verification");
  gens_cmd->add_option("--degree", inv_degree);
  auto* orbit_cmd = inv_cmd->add_subcommand("orbit-sum", "the invariant f_a");
  orbit_cmd->add_option("config", cfg_path)->required();
  orbit_cmd->add_option("--exponent", exponent, "a1,a2,b1,b2,c1,c2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (simples_cmd->parsed()) return cmd_simples(group_label, opt);
    if (fuse_cmd->parsed()) return cmd_fuse(group_label, fuse_a, fuse_b, opt);
    if (smatrix_cmd->parsed()) return cmd_smatrix(group_label, opt);
    if (faithful_cmd->parsed()) return cmd_faithful(group_label, opt);
    if (algebra_cmd->parsed()) {
      if (build_cmd->parsed()) return cmd_algebra_build(cfg_path, opt);
      return cmd_algebra_check(cfg_path, opt);
    }
    if (sp_cmd->parsed()) return cmd_superpotential(cfg_path, opt, sp_limit);
    if (hdet_cmd->parsed()) return cmd_hdet(cfg_path, opt);
    if (nak_cmd->parsed()) return cmd_nakayama(cfg_path, opt);
    if (inv_cmd->parsed()) {
      if (basis_cmd->parsed()) return cmd_inv_basis(cfg_path, opt, inv_degree);
      if (gens_cmd->parsed()) return cmd_inv_generators(cfg_path, opt, verify, inv_degree);
      return cmd_inv_orbit_sum(cfg_path, opt, exponent);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal check failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
