#include <CLI11.hpp>

#include <atomic>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "covres/branching.hpp"
#include "covres/cache.hpp"
#include "covres/char_engine.hpp"
#include "covres/euler.hpp"
#include "covres/partition.hpp"
#include "covres/pieri.hpp"
#include "covres/shape_engine.hpp"
#include "covres/tensor_oracle.hpp"
#include "covres/util.hpp"

namespace {

using covres::Flavor;
using covres::GroupFamily;
using covres::Int;
using covres::Partition;
using covres::Rat;
using json = nlohmann::ordered_json;

struct Options {
  std::string format = "table";
  std::string cache_dir;
  bool no_cache = false;
  int jobs = 1;
};

// comma-separated parts; the empty partition is "" or "0"
Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw covres::domain_error("cannot read '" + text +
                                 "' as a partition; expected comma-separated "
                                 "weakly decreasing parts, e.g. 2,1");
    }
  }
  return Partition(parts);
}

Flavor parse_flavor(const std::string& name) {
  return name == "skew" ? Flavor::skew : Flavor::symmetric;
}

json partition_json(const Partition& p) {
  json a = json::array();
  for (int x : p.parts()) a.push_back(x);
  return a;
}

// space-joined parts for csv cells, where commas would collide
std::string csv_cell(const Partition& p) {
  std::string s;
  for (int x : p.parts()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(x);
  }
  return s;
}

json header(const std::string& command) {
  json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  return doc;
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_shape(const Options& opt, const std::string& flavor_name, int r,
              const std::string& chi_text, bool appendix) {
  Partition chi = parse_partition(chi_text);
  Flavor flavor = parse_flavor(flavor_name);
  if (appendix)
    covres::require(flavor == Flavor::skew,
                    "the --appendix route is defined for the skew flavor");
  covres::ResolutionShape shape = appendix
                                      ? covres::appendix_shape(chi, r)
                                      : covres::resolution_shape(chi, r, flavor);
  if (opt.format == "json") {
    json doc = header("shape");
    doc["flavor"] = flavor_name;
    doc["r"] = r;
    doc["chi"] = partition_json(chi);
    doc["route"] = appendix ? "appendix" : "direct";
    json terms = json::array();
    for (const auto& [t, list] : shape.terms) {
      json row;
      row["index"] = t;
      row["summands"] = json::array();
      for (const Partition& p : list) row["summands"].push_back(partition_json(p));
      terms.push_back(row);
    }
    doc["terms"] = terms;
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "index,summand\n";
    for (const auto& [t, list] : shape.terms)
      for (const Partition& p : list)
        std::cout << t << "," << csv_cell(p) << "\n";
  } else {
    std::cout << "shape of " << chi.str() << "  flavor=" << flavor_name
              << "  r=" << r << "\n";
    for (const auto& [t, list] : shape.terms) {
      std::cout << "  " << t << ":";
      for (const Partition& p : list) std::cout << " " << p.str();
      std::cout << "\n";
    }
  }
  return 0;
}

int run_tilting(const Options& opt, const std::string& flavor_name, int r,
                int n, bool big) {
  covres::require(n > r && r > 0, "need n > r > 0");
  Flavor flavor = parse_flavor(flavor_name);
  std::vector<Partition> summands = covres::tilting_summands(n, r, flavor, big);
  if (opt.format == "json") {
    json doc = header("tilting");
    doc["flavor"] = flavor_name;
    doc["r"] = r;
    doc["n"] = n;
    doc["big"] = big;
    doc["summands"] = json::array();
    for (const Partition& p : summands)
      doc["summands"].push_back(partition_json(p));
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "summand\n";
    for (const Partition& p : summands) std::cout << csv_cell(p) << "\n";
  } else {
    std::cout << "tilting summands  flavor=" << flavor_name << "  r=" << r
              << "  n=" << n << (big ? "  (big)" : "") << "\n";
    for (const Partition& p : summands) std::cout << "  " << p.str() << "\n";
    std::cout << "total: " << summands.size() << "\n";
  }
  return 0;
}

int run_char(const Options& opt, const std::string& group, int r, int n,
             const std::string& chi_text, bool full) {
  Partition chi = parse_partition(chi_text);
  covres::LaurentCharacter ch(0);
  if (group == "sp") {
    covres::require(r >= 2 && r % 2 == 0, "sp needs even positive r");
    ch = covres::char_sp(chi, r / 2);
  } else if (group == "o") {
    ch = covres::char_o(chi, r);
  } else {
    covres::require(n >= 1, "gl needs --n, the number of variables");
    ch = covres::schur_monomials(chi, n);
  }
  Int dim = ch.sum_of_coefficients();
  if (opt.format == "json") {
    json doc = header("char");
    doc["group"] = group;
    if (group == "gl")
      doc["n"] = n;
    else
      doc["r"] = r;
    doc["chi"] = partition_json(chi);
    doc["dimension"] = dim.get_str();
    doc["term_count"] = ch.term_count();
    if (full) {
      doc["terms"] = json::array();
      for (const auto& [e, c] : ch.terms()) {
        json row;
        row["exponent"] = e;
        row["coefficient"] = c.get_str();
        doc["terms"].push_back(row);
      }
    }
    print_json(doc);
  } else if (opt.format == "csv") {
    if (full) {
      std::cout << "exponent,coefficient\n";
      for (const auto& [e, c] : ch.terms()) {
        std::string cellv;
        for (int x : e) {
          if (!cellv.empty()) cellv += ' ';
          cellv += std::to_string(x);
        }
        std::cout << cellv << "," << c.get_str() << "\n";
      }
    } else {
      std::cout << "dimension\n" << dim.get_str() << "\n";
    }
  } else {
    std::cout << "character  group=" << group << "  label=" << chi.str()
              << "\n";
    std::cout << "dimension: " << dim.get_str() << "\n";
    std::cout << "monomials: " << ch.term_count() << "\n";
    if (full)
      for (const auto& [e, c] : ch.terms()) {
        std::cout << "  [";
        for (std::size_t i = 0; i < e.size(); ++i)
          std::cout << (i ? "," : "") << e[i];
        std::cout << "] " << c.get_str() << "\n";
      }
  }
  return 0;
}

int run_branch(const Options& opt, const std::string& group, int r,
               const std::string& lambda_text) {
  Partition lambda = parse_partition(lambda_text);
  GroupFamily fam = group == "sp" ? GroupFamily::sp : GroupFamily::o;
  std::map<Partition, Int> table = covres::restrict_standard(lambda, r, fam);
  if (opt.format == "json") {
    json doc = header("branch");
    doc["group"] = group;
    doc["r"] = r;
    doc["lambda"] = partition_json(lambda);
    doc["restriction"] = json::array();
    for (const auto& [mu, mult] : table) {
      json row;
      row["mu"] = partition_json(mu);
      row["multiplicity"] = mult.get_str();
      doc["restriction"].push_back(row);
    }
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "mu,multiplicity\n";
    for (const auto& [mu, mult] : table)
      std::cout << csv_cell(mu) << "," << mult.get_str() << "\n";
  } else {
    std::cout << "restriction of " << lambda.str() << "  group=" << group
              << "  r=" << r << "\n";
    for (const auto& [mu, mult] : table)
      std::cout << "  " << mu.str() << "  x" << mult.get_str() << "\n";
  }
  return 0;
}

int run_verify_euler(const Options& opt, const std::string& flavor_name, int r,
                     const std::string& chi_text, int degree) {
  Partition chi = parse_partition(chi_text);
  covres::VerificationReport rep =
      covres::verify_euler(chi, r, parse_flavor(flavor_name), degree);
  if (opt.format == "json") {
    json doc = header("verify euler");
    doc["flavor"] = flavor_name;
    doc["r"] = r;
    doc["chi"] = partition_json(chi);
    doc["degree"] = degree;
    doc["ok"] = rep.ok;
    doc["degrees_checked"] = rep.degrees_checked;
    doc["detail"] = rep.detail;
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "ok,degrees_checked\n"
              << (rep.ok ? "true" : "false") << "," << rep.degrees_checked
              << "\n";
  } else {
    std::cout << "euler check  chi=" << chi.str() << "  flavor=" << flavor_name
              << "  r=" << r << "  degrees 0.." << degree << "\n";
    std::cout << "result: " << (rep.ok ? "pass" : "FAIL") << " ("
              << rep.degrees_checked << " degrees)\n";
    if (!rep.ok) std::cout << rep.detail << "\n";
  }
  return rep.ok ? 0 : 1;
}

int run_verify_hom(const Options& opt, int r, int n,
                   const std::string& lambda_text, const std::string& mu_text,
                   int degree) {
  covres::require(n >= 1, "the multiplicity space needs positive dimension");
  Partition lambda = parse_partition(lambda_text);
  Partition mu = parse_partition(mu_text);
  std::vector<Int> dims = covres::hom_graded_dims(lambda, mu, n, r, degree);
  std::vector<Int> swapped = covres::hom_graded_dims(mu, lambda, n, r, degree);
  bool symmetric = dims == swapped;
  bool delta = dims[0] == (lambda == mu ? 1 : 0);
  bool ok = symmetric && delta;
  if (opt.format == "json") {
    json doc = header("verify hom");
    doc["r"] = r;
    doc["n"] = n;
    doc["lambda"] = partition_json(lambda);
    doc["mu"] = partition_json(mu);
    doc["degree"] = degree;
    doc["dims"] = json::array();
    for (const Int& d : dims) doc["dims"].push_back(d.get_str());
    doc["symmetric"] = symmetric;
    doc["degree_zero_delta"] = delta;
    doc["ok"] = ok;
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "degree,dimension\n";
    for (std::size_t d = 0; d < dims.size(); ++d)
      std::cout << d << "," << dims[d].get_str() << "\n";
  } else {
    std::cout << "hom dimensions  lambda=" << lambda.str()
              << "  mu=" << mu.str() << "  r=" << r << "  n=" << n << "\n";
    for (std::size_t d = 0; d < dims.size(); ++d)
      std::cout << "  degree " << d << ": " << dims[d].get_str() << "\n";
    std::cout << "argument swap symmetric: " << (symmetric ? "yes" : "NO")
              << "\n";
    std::cout << "degree 0 is the identity count: " << (delta ? "yes" : "NO")
              << "\n";
  }
  return ok ? 0 : 1;
}

int run_oracle_invdim(const Options& opt, const std::string& flavor_name,
                      int r, const std::string& chi_text, int degree) {
  Partition chi = parse_partition(chi_text);
  Int dim =
      covres::invariant_dimension(chi, r, degree, parse_flavor(flavor_name));
  if (opt.format == "json") {
    json doc = header("oracle invdim");
    doc["flavor"] = flavor_name;
    doc["r"] = r;
    doc["chi"] = partition_json(chi);
    doc["degree"] = degree;
    doc["dimension"] = dim.get_str();
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "dimension\n" << dim.get_str() << "\n";
  } else {
    std::cout << "invariant dimension  chi=" << chi.str()
              << "  flavor=" << flavor_name << "  r=" << r
              << "  degree=" << degree << "\n";
    std::cout << dim.get_str() << "\n";
  }
  return 0;
}

// degrees are independent here, so this is the one command where --jobs
// fans out; results land in indexed slots, keeping output order fixed
int run_oracle_crosscheck(const Options& opt, const std::string& flavor_name,
                          int r, const std::string& chi_text, int degree) {
  Partition chi = parse_partition(chi_text);
  Flavor flavor = parse_flavor(flavor_name);
  std::vector<Int> expected = covres::covariant_dims(chi, r, flavor, r, degree);
  std::vector<Int> got(degree + 1);
  int workers = std::min(opt.jobs, degree + 1);
  if (workers <= 1) {
    for (int d = 0; d <= degree; ++d)
      got[d] = covres::invariant_dimension(chi, r, d, flavor);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (int d = next.fetch_add(1); d <= degree; d = next.fetch_add(1))
            got[d] = covres::invariant_dimension(chi, r, d, flavor);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }
  bool ok = true;
  for (int d = 0; d <= degree; ++d) ok = ok && got[d] == expected[d];
  if (opt.format == "json") {
    json doc = header("oracle crosscheck");
    doc["flavor"] = flavor_name;
    doc["r"] = r;
    doc["chi"] = partition_json(chi);
    doc["degree"] = degree;
    doc["degrees"] = json::array();
    for (int d = 0; d <= degree; ++d) {
      json row;
      row["degree"] = d;
      row["oracle"] = got[d].get_str();
      row["character"] = expected[d].get_str();
      row["match"] = got[d] == expected[d];
      doc["degrees"].push_back(row);
    }
    doc["ok"] = ok;
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "degree,oracle,character,match\n";
    for (int d = 0; d <= degree; ++d)
      std::cout << d << "," << got[d].get_str() << ","
                << expected[d].get_str() << ","
                << (got[d] == expected[d] ? "true" : "false") << "\n";
  } else {
    std::cout << "oracle cross-check  chi=" << chi.str()
              << "  flavor=" << flavor_name << "  r=" << r << "\n";
    for (int d = 0; d <= degree; ++d)
      std::cout << "  degree " << d << ": oracle " << got[d].get_str()
                << "  character " << expected[d].get_str()
                << (got[d] == expected[d] ? "" : "  MISMATCH") << "\n";
    std::cout << "result: " << (ok ? "pass" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int run_pieri(const Options& opt, int r, const std::string& chi_text,
              std::uint64_t seed, bool verify_homology, int degree) {
  Partition chi = parse_partition(chi_text);
  covres::PieriSystem sys = covres::solve_pieri_system(chi, r, seed);
  covres::VerificationReport hom;
  if (verify_homology) hom = covres::verify_complex_homology(chi, r, degree);
  if (opt.format == "json") {
    json doc = header("pieri solve");
    doc["r"] = r;
    doc["chi"] = partition_json(chi);
    doc["seed"] = seed;
    doc["levels"] = json::array();
    for (const auto& level : sys.levels) {
      json row = json::array();
      for (const Partition& p : level) row.push_back(partition_json(p));
      doc["levels"].push_back(row);
    }
    doc["edges"] = json::array();
    for (const auto& [key, x] : sys.scalars) {
      json row;
      row["from"] = partition_json(key.first);
      row["to"] = partition_json(key.second);
      row["scalar"] = x.get_str();
      doc["edges"].push_back(row);
    }
    if (verify_homology) {
      doc["homology"] = json();
      doc["homology"]["degree"] = degree;
      doc["homology"]["ok"] = hom.ok;
      doc["homology"]["detail"] = hom.detail;
    }
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "from,to,scalar\n";
    for (const auto& [key, x] : sys.scalars)
      std::cout << csv_cell(key.first) << "," << csv_cell(key.second) << ","
                << x.get_str() << "\n";
  } else {
    std::cout << "pieri system  chi=" << chi.str() << "  r=" << r << "\n";
    for (std::size_t k = 0; k < sys.levels.size(); ++k) {
      std::cout << "  level " << k << ":";
      for (const Partition& p : sys.levels[k]) std::cout << " " << p.str();
      std::cout << "\n";
    }
    for (const auto& [key, x] : sys.scalars)
      std::cout << "  x[" << key.first.str() << " -> " << key.second.str()
                << "] = " << x.get_str() << "\n";
    if (verify_homology) {
      std::cout << "homology (degrees 0.." << degree
                << "): " << (hom.ok ? "pass" : "FAIL") << "\n";
      if (!hom.ok) std::cout << hom.detail;
    }
  }
  return !verify_homology || hom.ok ? 0 : 1;
}

struct Check {
  std::string module;
  std::string name;
  std::function<bool()> run;
};

std::vector<Check> selftest_checks() {
  using namespace covres;
  std::vector<Check> checks;
  checks.push_back({"partitions", "legs exceed arms by one in the labels", [] {
    auto labels = enumerate_q_minus1(8, 6);
    if (labels != std::vector<Partition>{Partition{4, 1, 1, 1, 1},
                                         Partition{3, 2, 2, 1}})
      return false;
    for (const Partition& p : labels)
      if (!has_legs_arms_plus_one(p)) return false;
    return true;
  }});
  checks.push_back({"partitions", "conjugation is an involution", [] {
    for (const Partition& p : enumerate_box(4, 4))
      if (p.conjugate().conjugate() != p) return false;
    return true;
  }});
  checks.push_back({"characters", "classical dimensions at spot values", [] {
    return sp_dim(Partition{1, 1}, 2) == 5 && o_dim(Partition{2}, 3) == 5 &&
           schur_dim(Partition{2, 1}, 3) == 8;
  }});
  checks.push_back({"characters", "wedge powers decompose without repeats", [] {
    auto m = peel_gl(wedge_of_wedge2_character(2, 4), 4);
    auto expect = enumerate_q_minus1(4, 4);
    std::vector<Partition> got;
    for (const auto& [p, c] : m) {
      if (c != 1) return false;
      got.push_back(p);
    }
    return got == expect;
  }});
  checks.push_back({"branching", "restriction keeps the first part bound", [] {
    for (const Partition& lam : enumerate_box(2, 2)) {
      Int total = 0;
      for (const auto& [mu, mult] : restrict_standard(lam, 4, GroupFamily::sp)) {
        if (mu.part(1) > lam.part(1)) return false;
        total += mult * sp_dim(mu, 2);
      }
      if (total != schur_dim(lam, 4)) return false;
    }
    return true;
  }});
  checks.push_back({"shapes", "two-term shape at the spot weight", [] {
    ResolutionShape s = resolution_shape(Partition{2, 1}, 4, Flavor::skew);
    std::map<int, std::vector<Partition>> expect{
        {0, {Partition{2, 1}}}, {1, {Partition{2, 1, 1, 1}}}};
    return s.terms == expect &&
           appendix_shape(Partition{2, 1}, 4).terms == expect;
  }});
  checks.push_back({"euler", "alternating sums match the covariants", [] {
    return verify_euler(Partition{1, 1}, 4, Flavor::skew, 6).ok &&
           verify_euler(Partition{1}, 3, Flavor::symmetric, 5).ok;
  }});
  checks.push_back({"oracle", "kernel count equals the character count", [] {
    return invariant_dimension(Partition{}, 4, 2, Flavor::skew) == 6 &&
           cross_check(Partition{1, 1}, 4, 2, Flavor::skew).ok;
  }});
  checks.push_back({"pieri", "split compositions reach the smaller summand", [] {
    return verify_lemma_a2(Partition{2, 1, 1}, Partition{1, 1}, 4);
  }});
  checks.push_back({"pieri", "homology sits in degree zero", [] {
    PieriSystem sys = solve_pieri_system(Partition{1, 1}, 4);
    for (const auto& [key, x] : sys.scalars)
      if (x == 0) return false;
    return verify_complex_homology(Partition{1, 1}, 4, 4).ok;
  }});
  checks.push_back({"cache", "memo round trip is transparent", [] {
    auto cold = restrict_standard(Partition{2, 2}, 4, GroupFamily::sp);
    auto warm = restrict_standard(Partition{2, 2}, 4, GroupFamily::sp);
    return cold == warm;
  }});
  return checks;
}

int run_selftest(const Options& opt) {
  std::vector<Check> checks = selftest_checks();
  std::vector<bool> results;
  bool all = true;
  for (const Check& c : checks) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception&) {
      ok = false;
    }
    results.push_back(ok);
    all = all && ok;
  }
  if (opt.format == "json") {
    json doc = header("selftest");
    doc["checks"] = json::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      json row;
      row["module"] = checks[i].module;
      row["name"] = checks[i].name;
      row["ok"] = static_cast<bool>(results[i]);
      doc["checks"].push_back(row);
    }
    doc["ok"] = all;
    print_json(doc);
  } else if (opt.format == "csv") {
    std::cout << "module,name,ok\n";
    for (std::size_t i = 0; i < checks.size(); ++i)
      std::cout << checks[i].module << "," << checks[i].name << ","
                << (results[i] ? "true" : "false") << "\n";
  } else {
    for (std::size_t i = 0; i < checks.size(); ++i)
      std::cout << (results[i] ? "PASS" : "FAIL") << "  " << checks[i].module
                << ": " << checks[i].name << "\n";
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact workbench for equivariant resolution combinatorics"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--cache-dir", opt.cache_dir,
                 "on-disk memo directory (overrides COVRES_CACHE_DIR)");
  app.add_flag("--no-cache", opt.no_cache, "disable the on-disk memo cache");
  app.add_option("--jobs", opt.jobs,
                 "worker threads for degree-parallel verification")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  std::string flavor = "skew", group = "sp";
  std::string chi_text = "0", lambda_text = "0", mu_text = "0";
  int r = 4, n = 0, degree = 6;
  bool appendix = false, big = false, full = false, verify_homology = false;
  std::uint64_t seed = 0;

  CLI::App* shape = app.add_subcommand("shape", "terms of the resolution");
  shape->fallthrough();
  shape->add_option("--flavor", flavor, "skew or symmetric")
      ->check(CLI::IsMember({"skew", "symmetric"}))
      ->required();
  shape->add_option("--r", r, "size of the standard space")->required();
  shape->add_option("--chi", chi_text, "reduced weight")->required();
  shape->add_flag("--appendix", appendix,
                  "build degreewise from the Pieri index sets instead");

  CLI::App* tilting = app.add_subcommand("tilting", "tilting summand labels");
  tilting->fallthrough();
  tilting->add_option("--flavor", flavor)
      ->check(CLI::IsMember({"skew", "symmetric"}))
      ->required();
  tilting->add_option("--r", r)->required();
  tilting->add_option("--n", n, "ambient dimension")->required();
  tilting->add_flag("--big", big, "the generator list for the whole category");

  CLI::App* chr = app.add_subcommand("char", "irreducible character data");
  chr->fallthrough();
  chr->add_option("--group", group, "sp, o, or gl")
      ->check(CLI::IsMember({"sp", "o", "gl"}))
      ->required();
  chr->add_option("--r", r, "group size for sp/o");
  chr->add_option("--n", n, "variable count for gl");
  chr->add_option("--chi", chi_text, "highest weight")->required();
  chr->add_flag("--full", full, "print the monomial expansion");

  CLI::App* branch = app.add_subcommand("branch", "restriction to a subgroup");
  branch->fallthrough();
  branch->add_option("--group", group, "sp or o")
      ->check(CLI::IsMember({"sp", "o"}))
      ->required();
  branch->add_option("--r", r)->required();
  branch->add_option("--lambda", lambda_text, "gl highest weight")->required();

  CLI::App* verify = app.add_subcommand("verify", "exact verification runs");
  verify->require_subcommand(1);
  verify->fallthrough();
  CLI::App* veuler =
      verify->add_subcommand("euler", "alternating sum vs covariants");
  veuler->fallthrough();
  veuler->add_option("--flavor", flavor)
      ->check(CLI::IsMember({"skew", "symmetric"}))
      ->required();
  veuler->add_option("--r", r)->required();
  veuler->add_option("--chi", chi_text)->required();
  veuler->add_option("--degree", degree, "check degrees 0..D")
      ->capture_default_str();
  CLI::App* vhom = verify->add_subcommand("hom", "graded hom dimensions");
  vhom->fallthrough();
  vhom->add_option("--r", r)->required();
  vhom->add_option("--n", n)->required();
  vhom->add_option("--lambda", lambda_text)->required();
  vhom->add_option("--mu", mu_text)->required();
  vhom->add_option("--degree", degree)->capture_default_str();

  CLI::App* oracle = app.add_subcommand("oracle", "independent invariant counts");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  CLI::App* invdim =
      oracle->add_subcommand("invdim", "one invariant dimension");
  invdim->fallthrough();
  invdim->add_option("--flavor", flavor)
      ->check(CLI::IsMember({"skew", "symmetric"}))
      ->required();
  invdim->add_option("--r", r)->required();
  invdim->add_option("--chi", chi_text)->required();
  invdim->add_option("--degree", degree)->required();
  CLI::App* crosscheck =
      oracle->add_subcommand("crosscheck", "oracle vs character, per degree");
  crosscheck->fallthrough();
  crosscheck->add_option("--flavor", flavor)
      ->check(CLI::IsMember({"skew", "symmetric"}))
      ->required();
  crosscheck->add_option("--r", r)->required();
  crosscheck->add_option("--chi", chi_text)->required();
  crosscheck->add_option("--degree", degree)->required();

  CLI::App* pieri = app.add_subcommand("pieri", "equivariant differential data");
  pieri->require_subcommand(1);
  pieri->fallthrough();
  CLI::App* psolve = pieri->add_subcommand("solve", "scalars on every edge");
  psolve->fallthrough();
  psolve->add_option("--r", r)->required();
  psolve->add_option("--chi", chi_text)->required();
  psolve->add_option("--seed", seed, "gauge seed")->capture_default_str();
  psolve->add_flag("--verify-homology", verify_homology,
                   "materialize the complex and check its homology");
  psolve->add_option("--degree", degree, "internal degree bound")
      ->capture_default_str();

  app.add_subcommand("selftest", "fast invariant checks for every module");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (opt.no_cache)
    covres::DiskCache::instance().disable();
  else if (!opt.cache_dir.empty())
    covres::DiskCache::instance().configure(opt.cache_dir);

  try {
    if (shape->parsed()) return run_shape(opt, flavor, r, chi_text, appendix);
    if (tilting->parsed()) return run_tilting(opt, flavor, r, n, big);
    if (chr->parsed()) return run_char(opt, group, r, n, chi_text, full);
    if (branch->parsed()) return run_branch(opt, group, r, lambda_text);
    if (veuler->parsed())
      return run_verify_euler(opt, flavor, r, chi_text, degree);
    if (vhom->parsed())
      return run_verify_hom(opt, r, n, lambda_text, mu_text, degree);
    if (invdim->parsed())
      return run_oracle_invdim(opt, flavor, r, chi_text, degree);
    if (crosscheck->parsed())
      return run_oracle_crosscheck(opt, flavor, r, chi_text, degree);
    if (psolve->parsed())
      return run_pieri(opt, r, chi_text, seed, verify_homology, degree);
    return run_selftest(opt);
  } catch (const covres::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const covres::internal_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  }
}
