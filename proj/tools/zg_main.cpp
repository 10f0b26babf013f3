// zg command-line tool.
//
// Subcommands:
//   group info | group elements      inspect a group
//   verify thm2|thm1|eq9|cor1        check one relation on one element
//   random-test thm2                 seeded batch verification
//   probe traces                     trace pattern for prime-power units
//   sieve                            admissible partial-augmentation vectors
//
// Exit codes: 0 all checks passed, 1 at least one row failed (a mathematical
// finding), 2 usage or precondition error.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zg/zg.hpp"

namespace {

struct cli_state {
  std::string group_arg;
  int closure_cap = zg::default_closure_cap;
  std::string format = "json";

  std::string element_file;
  long long trivial_unit = 0;
  std::string bicyclic;
  std::string conjugate_bicyclic;
  std::string subgroup;

  long long q = 0, p = 0, n = 0, k = 0, beta = 0;
  std::string mode = "congruence";
  long long order = 1;
  long long sieve_cap = zg::default_sieve_cap;

  long long trials = 200, coeff_bound = 3, q_max = 12;
  std::string primes = "2,3,5,7";
  uint64_t seed = 0;
};

std::pair<int32_t, int32_t> parse_index_pair(const std::string& text, const char* what) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw zg::parse_error(std::string(what) + " expects 'g,h' element indices, got '" +
                          text + "'");
  try {
    std::size_t pos = 0;
    long long a = std::stoll(text.substr(0, comma), &pos);
    if (pos != comma) throw std::invalid_argument(text);
    std::string rest = text.substr(comma + 1);
    long long b = std::stoll(rest, &pos);
    if (pos != rest.size()) throw std::invalid_argument(text);
    return {static_cast<int32_t>(a), static_cast<int32_t>(b)};
  } catch (const std::exception&) {
    throw zg::parse_error(std::string(what) + " expects 'g,h' element indices, got '" +
                          text + "'");
  }
}

std::vector<long long> parse_int_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                    : comma - start);
    try {
      std::size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw zg::parse_error(std::string(what) + " expects a comma-separated integer list, got '" +
                            text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty())
    throw zg::parse_error(std::string(what) + " expects a nonempty integer list");
  return out;
}

// The group named on the command line, or the one named inside the element
// file when --group is absent. Built exactly once per run.
std::shared_ptr<const zg::group> resolve_target_group(const cli_state& st, CLI::App* cmd) {
  if (cmd->count("--group") > 0) return zg::resolve_group(st.group_arg, st.closure_cap);
  if (!st.element_file.empty()) {
    nlohmann::json j = zg::load_json_file(st.element_file);
    return zg::resolve_group(zg::element_json_group(j), st.closure_cap);
  }
  throw zg::parse_error("no group: pass --group or an element file with a 'group' field");
}

zg::ring_element build_element(const cli_state& st, CLI::App* cmd,
                               std::shared_ptr<const zg::group> grp) {
  int sources = (cmd->count("--element") > 0) + (cmd->count("--trivial-unit") > 0) +
                (cmd->count("--bicyclic") > 0);
  if (sources != 1)
    throw zg::parse_error(
        "exactly one element source required: --element, --trivial-unit, or --bicyclic");

  zg::ring_element u(grp);
  if (cmd->count("--element") > 0) {
    nlohmann::json j = zg::load_json_file(st.element_file);
    if (cmd->count("--group") > 0) {
      std::string inner = zg::element_json_group(j);
      if (inner != st.group_arg)
        throw zg::parse_error("element file group '" + inner + "' does not match --group '" +
                              st.group_arg + "'");
    }
    u = zg::element_from_json(j, grp);
  } else if (cmd->count("--trivial-unit") > 0) {
    u = zg::ring_element::of_element(grp, static_cast<int32_t>(st.trivial_unit));
  } else {
    auto [g, h] = parse_index_pair(st.bicyclic, "--bicyclic");
    u = zg::bicyclic_unit(grp, g, h);
  }

  if (!st.conjugate_bicyclic.empty()) {
    auto [g, h] = parse_index_pair(st.conjugate_bicyclic, "--conjugate-bicyclic");
    zg::ring_element b = zg::bicyclic_unit(grp, g, h);
    u = zg::conjugate_by_unit(b, u);
  }
  return u;
}

void print_report(const zg::verification_report& rep, const std::string& format) {
  if (format == "tsv")
    std::cout << zg::to_tsv(rep);
  else
    std::cout << zg::to_json(rep).dump(2) << '\n';
}

int report_exit(bool pass) { return pass ? 0 : 1; }

int run_group_info(const cli_state& st) {
  auto grp = zg::resolve_group(st.group_arg, st.closure_cap);
  const zg::class_table& ct = grp->classes();
  if (st.format == "tsv") {
    std::cout << "# group=" << grp->id() << " order=" << grp->order()
              << " exponent=" << grp->exponent() << " classes=" << ct.count() << '\n';
    std::cout << "class\trep\tsize\telement_order\trep_cycles\n";
    for (int c = 0; c < ct.count(); ++c)
      std::cout << c << '\t' << ct.at(c).rep << '\t' << ct.at(c).size << '\t'
                << grp->element_order(ct.at(c).rep) << '\t'
                << zg::format_cycles(grp->display_perm(ct.at(c).rep)) << '\n';
    return 0;
  }
  nlohmann::json j;
  j["group"] = grp->id();
  j["order"] = grp->order();
  j["exponent"] = grp->exponent();
  nlohmann::json classes = nlohmann::json::array();
  for (int c = 0; c < ct.count(); ++c) {
    nlohmann::json jc;
    jc["id"] = c;
    jc["rep"] = ct.at(c).rep;
    jc["size"] = ct.at(c).size;
    jc["element_order"] = grp->element_order(ct.at(c).rep);
    jc["rep_cycles"] = zg::format_cycles(grp->display_perm(ct.at(c).rep));
    classes.push_back(std::move(jc));
  }
  j["classes"] = std::move(classes);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_group_elements(const cli_state& st) {
  auto grp = zg::resolve_group(st.group_arg, st.closure_cap);
  if (st.format == "tsv") {
    std::cout << "# group=" << grp->id() << " order=" << grp->order() << '\n';
    std::cout << "index\tcycles\telement_order\tclass\n";
    for (int32_t i = 0; i < grp->order(); ++i)
      std::cout << i << '\t' << zg::format_cycles(grp->display_perm(i)) << '\t'
                << grp->element_order(i) << '\t' << grp->classes().class_of(i) << '\n';
    return 0;
  }
  nlohmann::json j;
  j["group"] = grp->id();
  j["order"] = grp->order();
  nlohmann::json elems = nlohmann::json::array();
  for (int32_t i = 0; i < grp->order(); ++i) {
    nlohmann::json je;
    je["index"] = i;
    je["cycles"] = zg::format_cycles(grp->display_perm(i));
    je["element_order"] = grp->element_order(i);
    je["class"] = grp->classes().class_of(i);
    elems.push_back(std::move(je));
  }
  j["elements"] = std::move(elems);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_verify(const cli_state& st, CLI::App* cmd, const std::string& relation) {
  auto grp = resolve_target_group(st, cmd);

  if (relation == "cor1") {
    zg::ring_element u(grp);
    long long beta = 0;
    if (cmd->count("--subgroup") > 0) {
      if (cmd->count("--element") + cmd->count("--trivial-unit") + cmd->count("--bicyclic") > 0)
        throw zg::parse_error("--subgroup replaces the element source flags");
      if (cmd->count("--beta") > 0)
        throw zg::parse_error("--beta is implied by --subgroup (beta = |H|)");
      std::vector<long long> raw = parse_int_list(st.subgroup, "--subgroup");
      std::vector<int32_t> members(raw.begin(), raw.end());
      auto [sum, size] = zg::subgroup_sum(grp, members);
      u = sum;
      beta = size;
    } else {
      if (cmd->count("--beta") == 0)
        throw zg::parse_error("cor1 needs --beta with an explicit element (or use --subgroup)");
      u = build_element(st, cmd, grp);
      beta = st.beta;
    }
    zg::check_mode mode;
    if (st.mode == "congruence")
      mode = zg::check_mode::congruence;
    else if (st.mode == "equality")
      mode = zg::check_mode::equality;
    else
      throw zg::parse_error("--mode must be 'congruence' or 'equality', got '" + st.mode + "'");
    zg::verification_report rep = zg::verify_corollary1(u, beta, st.q, st.p, mode);
    print_report(rep, st.format);
    return report_exit(rep.pass);
  }

  zg::ring_element u = build_element(st, cmd, grp);
  zg::verification_report rep = [&] {
    if (relation == "thm2") return zg::verify_theorem2(u, st.q, st.p);
    if (relation == "thm1") return zg::verify_theorem1(u, st.n, st.k);
    return zg::verify_eq9(u, st.n, st.k);
  }();
  print_report(rep, st.format);
  return report_exit(rep.pass);
}

int run_random_test(const cli_state& st) {
  auto grp = zg::resolve_group(st.group_arg, st.closure_cap);
  zg::thm2_sweep_config cfg;
  cfg.trials = st.trials;
  cfg.coeff_bound = st.coeff_bound;
  cfg.q_max = st.q_max;
  cfg.primes = parse_int_list(st.primes, "--primes");
  cfg.seed = st.seed;
  zg::thm2_sweep_result res = zg::random_test_thm2(grp, cfg);

  nlohmann::json j;
  j["group"] = grp->id();
  j["relation"] = "thm2-random";
  j["params"] = {{"trials", cfg.trials},
                 {"coeff_bound", cfg.coeff_bound},
                 {"q_max", cfg.q_max},
                 {"primes", cfg.primes},
                 {"seed", cfg.seed}};
  nlohmann::json trials = nlohmann::json::array();
  for (std::size_t i = 0; i < res.trials.size(); ++i) {
    const zg::thm2_trial& t = res.trials[i];
    nlohmann::json jt;
    jt["trial"] = i;
    jt["coeffs"] = zg::coeffs_to_json(t.element.coeffs());
    jt["pass"] = t.pass;
    nlohmann::json fails = nlohmann::json::array();
    for (const zg::verification_report& rep : t.failures) fails.push_back(zg::to_json(rep));
    jt["failures"] = std::move(fails);
    trials.push_back(std::move(jt));
  }
  j["trials"] = std::move(trials);
  j["pass"] = res.pass;
  std::cout << j.dump(2) << '\n';
  return report_exit(res.pass);
}

int run_probe(const cli_state& st, CLI::App* cmd) {
  auto grp = resolve_target_group(st, cmd);
  zg::ring_element u = build_element(st, cmd, grp);
  zg::trace_probe_report rep = zg::probe_trace_conjecture(u, st.p);
  if (st.format == "tsv")
    std::cout << zg::to_tsv(rep);
  else
    std::cout << zg::to_json(rep).dump(2) << '\n';
  return report_exit(rep.pass);
}

int run_sieve_cmd(const cli_state& st) {
  auto grp = zg::resolve_group(st.group_arg, st.closure_cap);
  zg::sieve_problem prob = zg::make_sieve_problem(grp, st.order, st.sieve_cap);
  zg::sieve_result res = zg::run_sieve(prob);
  std::cout << zg::to_json(res).dump(2) << '\n';
  return 0;
}

void add_common(CLI::App* cmd, cli_state& st, bool group_required) {
  CLI::Option* g = cmd->add_option(
      "--group", st.group_arg, "built-in name (C<n>, S3, S4, A4, A5, D4, Q8) or group file");
  if (group_required) g->required();
  cmd->add_option("--closure-cap", st.closure_cap, "maximum group order to build");
  cmd->add_option("--format", st.format, "output format: json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
}

void add_element_source(CLI::App* cmd, cli_state& st) {
  cmd->add_option("--element", st.element_file, "element JSON file");
  cmd->add_option("--trivial-unit", st.trivial_unit, "element index g, unit u = g");
  cmd->add_option("--bicyclic", st.bicyclic,
                  "element indices 'g,h': bicyclic unit from (g, h)");
  cmd->add_option("--conjugate-bicyclic", st.conjugate_bicyclic,
                  "element indices 'g,h': conjugate the element by that bicyclic unit");
}

}  // namespace

int main(int argc, char** argv) {
  cli_state st;
  CLI::App app{"integral group ring workbench"};
  app.require_subcommand(1);

  CLI::App* grp_cmd = app.add_subcommand("group", "inspect a finite group");
  grp_cmd->require_subcommand(1);
  CLI::App* info_cmd = grp_cmd->add_subcommand("info", "order, exponent, conjugacy classes");
  CLI::App* elems_cmd = grp_cmd->add_subcommand("elements", "element index listing");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify one relation on one element");
  verify_cmd->require_subcommand(1);
  CLI::App* thm2_cmd = verify_cmd->add_subcommand(
      "thm2", "congruence for nu_s(u^q) mod p, any u");
  CLI::App* thm1_cmd = verify_cmd->add_subcommand(
      "thm1", "exact relation for torsion units, n = k = 1 mod |u|");
  CLI::App* eq9_cmd = verify_cmd->add_subcommand(
      "eq9", "exact relation for nu_s(u^(nk)) of torsion units");
  CLI::App* cor1_cmd = verify_cmd->add_subcommand(
      "cor1", "congruence or equality for idempotent multiples u^2 = beta*u");

  CLI::App* random_cmd = app.add_subcommand("random-test", "seeded randomized verification");
  random_cmd->require_subcommand(1);
  CLI::App* rt2_cmd = random_cmd->add_subcommand("thm2", "random elements through verify thm2");

  CLI::App* probe_cmd = app.add_subcommand("probe", "conjecture probes");
  probe_cmd->require_subcommand(1);
  CLI::App* traces_cmd =
      probe_cmd->add_subcommand("traces", "trace pattern for units of order p^n");

  CLI::App* sieve_cmd =
      app.add_subcommand("sieve", "admissible partial-augmentation vectors for an order");

  add_common(info_cmd, st, true);
  add_common(elems_cmd, st, true);

  for (CLI::App* cmd : {thm2_cmd, thm1_cmd, eq9_cmd}) {
    add_common(cmd, st, false);
    add_element_source(cmd, st);
  }
  thm2_cmd->add_option("--q", st.q, "power exponent")->required();
  thm2_cmd->add_option("--p", st.p, "prime modulus")->required();
  for (CLI::App* cmd : {thm1_cmd, eq9_cmd}) {
    cmd->add_option("--n", st.n, "outer exponent")->required();
    cmd->add_option("--k", st.k, "power exponent coprime to the group exponent")->required();
  }

  add_common(cor1_cmd, st, false);
  add_element_source(cor1_cmd, st);
  cor1_cmd->add_option("--subgroup", st.subgroup,
                       "comma-separated element indices; uses u = sum(H), beta = |H|");
  cor1_cmd->add_option("--beta", st.beta, "beta with u^2 = beta*u");
  cor1_cmd->add_option("--q", st.q, "power exponent")->required();
  cor1_cmd->add_option("--p", st.p, "prime modulus")->required();
  cor1_cmd->add_option("--mode", st.mode, "congruence (default) or equality");

  add_common(rt2_cmd, st, true);
  rt2_cmd->add_option("--trials", st.trials, "number of random elements");
  rt2_cmd->add_option("--coeff-bound", st.coeff_bound, "coefficients drawn from [-b, b]");
  rt2_cmd->add_option("--q-max", st.q_max, "check all q = 1..q_max");
  rt2_cmd->add_option("--primes", st.primes, "comma-separated prime list");
  rt2_cmd->add_option("--seed", st.seed, "master seed (required: no ambient entropy)")
      ->required();

  add_common(traces_cmd, st, false);
  add_element_source(traces_cmd, st);
  traces_cmd->add_option("--p", st.p, "prime; unit order must be a power of it")->required();

  add_common(sieve_cmd, st, true);
  sieve_cmd->add_option("--order", st.order, "hypothesized torsion-unit order")->required();
  sieve_cmd->add_option("--cap", st.sieve_cap, "enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage diagnostic
    return 2;
  }

  try {
    if (info_cmd->parsed()) return run_group_info(st);
    if (elems_cmd->parsed()) return run_group_elements(st);
    if (thm2_cmd->parsed()) return run_verify(st, thm2_cmd, "thm2");
    if (thm1_cmd->parsed()) return run_verify(st, thm1_cmd, "thm1");
    if (eq9_cmd->parsed()) return run_verify(st, eq9_cmd, "eq9");
    if (cor1_cmd->parsed()) return run_verify(st, cor1_cmd, "cor1");
    if (rt2_cmd->parsed()) return run_random_test(st);
    if (traces_cmd->parsed()) return run_probe(st, traces_cmd);
    if (sieve_cmd->parsed()) return run_sieve_cmd(st);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const zg::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
