// Constraint sieve over hypothetical partial-augmentation vectors: the
// constraint builder, the enumerator, and the independent certifier.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "zg/group.hpp"
#include "zg/group_ring.hpp"
#include "zg/sieve.hpp"

namespace {

std::vector<std::vector<long long>> as_rows(const std::vector<zg::pa_vector>& vs) {
  std::vector<std::vector<long long>> rows;
  for (const zg::pa_vector& v : vs) {
    std::vector<long long> row;
    for (const zg::int_t& x : v.values()) row.push_back(static_cast<long long>(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool contains_row(const std::vector<std::vector<long long>>& rows,
                  const std::vector<long long>& row) {
  return std::find(rows.begin(), rows.end(), row) != rows.end();
}

// Brute force over the bound box with only the generic cuts (augmentation,
// identity pinned to zero for order > 1, class bounds), ignoring the eq1
// relations. Used as the reference for the n = k = 1 instance set.
std::vector<std::vector<long long>> box_cut(const zg::sieve_problem& prob) {
  std::vector<long long> bounds = zg::sieve_class_bounds(prob);
  int nc = static_cast<int>(bounds.size());
  int idc = prob.grp->classes().identity_class();
  std::vector<std::vector<long long>> out;
  std::vector<long long> v(nc, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == nc) {
      long long sum = 0;
      for (long long x : v) sum += x;
      if (sum != 1) return;
      if (prob.order > 1 && v[idc] != 0) return;
      out.push_back(v);
      return;
    }
    for (long long x = -bounds[depth]; x <= bounds[depth]; ++x) {
      v[depth] = x;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sieve pinned outputs on S3", "[sieve]") {
  auto s3 = zg::resolve_group("S3");

  zg::sieve_problem p1 = zg::make_sieve_problem(s3, 1);
  auto rows1 = as_rows(zg::enumerate_admissible(p1));
  REQUIRE(rows1 == std::vector<std::vector<long long>>{{1, 0, 0}});

  zg::sieve_problem p2 = zg::make_sieve_problem(s3, 2);
  auto rows2 = as_rows(zg::enumerate_admissible(p2));
  for (const auto& row : rows2) {
    REQUIRE(row[0] == 0);
    REQUIRE((row == std::vector<long long>{0, 1, 0} ||
             row == std::vector<long long>{0, 0, 1}));
  }
  REQUIRE(contains_row(rows2, {0, 1, 0}));
  REQUIRE(std::is_sorted(rows2.begin(), rows2.end()));

  zg::sieve_problem p3 = zg::make_sieve_problem(s3, 3);
  auto rows3 = as_rows(zg::enumerate_admissible(p3));
  REQUIRE(contains_row(rows3, {0, 0, 1}));
}

TEST_CASE("order one pins every group to the identity vector", "[sieve]") {
  for (const char* name : {"C6", "S3", "D4", "Q8", "A4", "S4"}) {
    auto grp = zg::resolve_group(name);
    auto rows = as_rows(zg::enumerate_admissible(zg::make_sieve_problem(grp, 1)));
    std::vector<long long> expected(grp->classes().count(), 0);
    expected[grp->classes().identity_class()] = 1;
    REQUIRE(rows == std::vector<std::vector<long long>>{expected});
  }
}

TEST_CASE("default instances respect the residue and coprimality rules", "[sieve]") {
  for (const char* name : {"S3", "D4", "A4"}) {
    auto grp = zg::resolve_group(name);
    long long e = grp->exponent();
    for (long long o : {1LL, 2LL, 3LL}) {
      zg::sieve_problem prob = zg::make_sieve_problem(grp, o);
      REQUIRE_FALSE(prob.instances.empty());
      for (auto [n, k] : prob.instances) {
        REQUIRE(n % o == 1 % o);
        REQUIRE(k % o == 1 % o);
        REQUIRE(std::gcd(k, e) == 1);
        REQUIRE(k < std::max<long long>(e, 2));
      }
    }
  }
}

TEST_CASE("n = k = 1 instances are tautologies", "[sieve]") {
  auto s3 = zg::resolve_group("S3");
  zg::sieve_problem prob;
  prob.grp = s3;
  prob.order = 2;
  prob.instances = {{1, 1}};

  for (const zg::constraint& c : zg::build_constraints(prob)) {
    if (c.k != zg::constraint::kind::eq1_relation) continue;
    for (std::size_t x = 0; x < c.coeff.size(); ++x)
      REQUIRE(c.coeff[x] == (static_cast<int>(x) == c.target_class ? 1 : 0));
  }

  // With only the tautology instance, the admissible set equals the cut by
  // augmentation, Berman-Higman, and bounds alone.
  auto rows = as_rows(zg::enumerate_admissible(prob));
  REQUIRE(rows == box_cut(prob));

  auto d4 = zg::resolve_group("D4");
  zg::sieve_problem probd;
  probd.grp = d4;
  probd.order = 4;
  probd.instances = {{1, 1}};
  REQUIRE(as_rows(zg::enumerate_admissible(probd)) == box_cut(probd));
}

TEST_CASE("adding instances never enlarges the admissible set", "[sieve]") {
  for (const char* name : {"S3", "D4", "C8"}) {
    auto grp = zg::resolve_group(name);
    for (long long o : {2LL, 3LL, 4LL}) {
      zg::sieve_problem full = zg::make_sieve_problem(grp, o);
      if (full.instances.empty()) continue;
      zg::sieve_problem partial = full;
      partial.instances.resize(1);
      auto rows_full = as_rows(zg::enumerate_admissible(full));
      auto rows_partial = as_rows(zg::enumerate_admissible(partial));
      for (const auto& row : rows_full) REQUIRE(contains_row(rows_partial, row));
    }
  }
}

TEST_CASE("enumerator agrees with the certifier on the whole box", "[sieve]") {
  struct scenario {
    const char* name;
    long long order;
  };
  for (scenario sc : {scenario{"S3", 2}, scenario{"S3", 3}, scenario{"C8", 2}}) {
    auto grp = zg::resolve_group(sc.name);
    zg::sieve_problem prob = zg::make_sieve_problem(grp, sc.order);
    auto admitted = as_rows(zg::enumerate_admissible(prob));

    std::vector<long long> bounds = zg::sieve_class_bounds(prob);
    int nc = static_cast<int>(bounds.size());
    std::vector<long long> v(nc, 0);
    long long checked = 0;
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == nc) {
        ++checked;
        std::vector<zg::int_t> vals(v.begin(), v.end());
        zg::pa_vector cand(grp, std::move(vals));
        bool ok = zg::all_satisfied(zg::certify(cand, prob));
        REQUIRE(ok == contains_row(admitted, v));
        return;
      }
      for (long long x = -bounds[depth]; x <= bounds[depth]; ++x) {
        v[depth] = x;
        self(self, depth + 1);
      }
    };
    rec(rec, 0);
    REQUIRE(checked > 0);
  }
}

TEST_CASE("eq1 relations do narrow beyond the generic cuts", "[sieve]") {
  // On C8 at order 2 only the real involution's vector survives the eq1
  // relations, while the generic cuts admit many more vectors.
  auto c8 = zg::resolve_group("C8");
  zg::sieve_problem full = zg::make_sieve_problem(c8, 2);
  auto rows = as_rows(zg::enumerate_admissible(full));
  auto generic = box_cut(full);
  REQUIRE(rows.size() < generic.size());
  for (const auto& row : rows) REQUIRE(contains_row(generic, row));
}

TEST_CASE("soundness: real elements survive the sieve", "[sieve]") {
  for (const char* name : {"S3", "S4"}) {
    auto grp = zg::resolve_group(name);
    std::set<long long> spectrum;
    for (int32_t x = 0; x < grp->order(); ++x) spectrum.insert(grp->element_order(x));
    for (long long o : spectrum) {
      zg::sieve_problem prob = zg::make_sieve_problem(grp, o);
      auto rows = as_rows(zg::enumerate_admissible(prob));
      for (int32_t x = 0; x < grp->order(); ++x) {
        if (grp->element_order(x) != o) continue;
        zg::pa_vector pa = zg::partial_augmentations(zg::ring_element::of_element(grp, x));
        std::vector<long long> row;
        for (const zg::int_t& c : pa.values()) row.push_back(static_cast<long long>(c));
        REQUIRE(contains_row(rows, row));
        REQUIRE(zg::all_satisfied(zg::certify(pa, prob)));
      }
    }
  }
}

TEST_CASE("run_sieve reports witnesses and serializes", "[sieve]") {
  auto s3 = zg::resolve_group("S3");
  zg::sieve_result res = zg::run_sieve(zg::make_sieve_problem(s3, 2));
  REQUIRE(res.witnesses == std::vector<int32_t>{1});
  REQUIRE_FALSE(res.constraints_used.empty());

  nlohmann::json j = zg::to_json(res);
  CHECK(j["group"] == "S3");
  CHECK(j["order"] == 2);
  CHECK(j["admissible"] == nlohmann::json::parse("[[0,0,1],[0,1,0]]"));
  CHECK(j["witnesses"] == nlohmann::json::parse("[1]"));
  CHECK(j["constraints_used"].size() == res.constraints_used.size());

  // Orders outside the spectrum still run; they just have no witnesses.
  zg::sieve_result res5 = zg::run_sieve(zg::make_sieve_problem(s3, 5));
  CHECK(res5.witnesses.empty());
}

TEST_CASE("certify flags specific violations", "[sieve]") {
  auto s3 = zg::resolve_group("S3");
  zg::sieve_problem prob = zg::make_sieve_problem(s3, 2);

  // nu_identity = 1 violates exactly the Berman-Higman entry (the
  // augmentation holds, bounds hold).
  zg::pa_vector bad_bh(s3, {zg::int_t(1), zg::int_t(0), zg::int_t(0)});
  auto entries = zg::certify(bad_bh, prob);
  bool saw_bh = false;
  for (const auto& e : entries) {
    if (e.description.rfind("berman_higman", 0) == 0) {
      saw_bh = true;
      REQUIRE_FALSE(e.satisfied);
    }
    if (e.description.rfind("augmentation", 0) == 0) REQUIRE(e.satisfied);
    if (e.description.rfind("class_bound", 0) == 0) REQUIRE(e.satisfied);
  }
  REQUIRE(saw_bh);
  REQUIRE_FALSE(zg::all_satisfied(entries));

  // Zero vector violates the augmentation.
  zg::pa_vector zero(s3, {zg::int_t(0), zg::int_t(0), zg::int_t(0)});
  entries = zg::certify(zero, prob);
  for (const auto& e : entries)
    if (e.description.rfind("augmentation", 0) == 0) REQUIRE_FALSE(e.satisfied);

  // Wrong group and oversized entries are usage errors.
  auto d4 = zg::resolve_group("D4");
  zg::pa_vector foreign(d4, std::vector<zg::int_t>(d4->classes().count(), zg::int_t(0)));
  CHECK_THROWS_AS(zg::certify(foreign, prob), zg::precondition_error);
  zg::int_t huge = zg::parse_int("123456789123456789123456789");
  zg::pa_vector big(s3, {huge, zg::int_t(0), zg::int_t(0)});
  CHECK_THROWS_AS(zg::certify(big, prob), zg::precondition_error);
}

TEST_CASE("sieve budget and instance validation", "[sieve]") {
  auto s4 = zg::resolve_group("S4");
  zg::sieve_problem prob = zg::make_sieve_problem(s4, 2, 10);
  CHECK_THROWS_AS(zg::enumerate_admissible(prob), zg::budget_error);

  auto s3 = zg::resolve_group("S3");
  zg::sieve_problem bad;
  bad.grp = s3;
  bad.order = 2;
  bad.instances = {{2, 1}};  // n not congruent to 1 mod o
  CHECK_THROWS_AS(zg::build_constraints(bad), zg::precondition_error);
  bad.instances = {{1, 2}};  // k shares a factor with the exponent
  CHECK_THROWS_AS(zg::build_constraints(bad), zg::precondition_error);
  bad.instances = {{0, 1}};
  CHECK_THROWS_AS(zg::build_constraints(bad), zg::precondition_error);

  CHECK_THROWS_AS(zg::make_sieve_problem(nullptr, 1), zg::precondition_error);
  CHECK_THROWS_AS(zg::make_sieve_problem(s3, 0), zg::precondition_error);
}
