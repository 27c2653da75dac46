#include <doctest.h>

#include <set>

#include "groupwalk/group.hpp"
#include "test_util.hpp"

using namespace groupwalk;

TEST_CASE("cyclic groups") {
  const FiniteGroup z1 = FiniteGroup::cyclic(1);
  CHECK(z1.order() == 1);
  CHECK(z1.table().at(0, 0) == 0);

  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  CHECK(z2.table().table == std::vector<std::int32_t>{0, 1, 1, 0});

  // In Z_4 the element at index 2 (residue 1) has inverse at index 4
  // (residue 3): 1 + 3 = 0 mod 4.
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  CHECK(z4.inverse(1) == 3);
  CHECK(z4.identity() == 0);

  CHECK_THROWS_AS(FiniteGroup::cyclic(0), InvalidParameterError);
  CHECK_THROWS_AS(FiniteGroup::cyclic(FiniteGroup::kMaxOrder + 1), InvalidParameterError);
}

TEST_CASE("dihedral groups") {
  // D_1 has order 2 and the same table as Z_2.
  CHECK(FiniteGroup::dihedral(1).table().table == FiniteGroup::cyclic(2).table().table);

  // D_2 is the Klein four-group: every element is its own inverse.
  const FiniteGroup d2 = FiniteGroup::dihedral(2);
  CHECK(d2.order() == 4);
  for (int i = 0; i < 4; ++i) CHECK(d2.inverse(i) == i);

  // D_3 has order 6 and is nonabelian: r*s != s*r.
  const FiniteGroup d3 = FiniteGroup::dihedral(3);
  CHECK(d3.order() == 6);
  bool noncommuting = false;
  for (int i = 0; i < 6 && !noncommuting; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (d3.mul(i, j) != d3.mul(j, i)) {
        noncommuting = true;
        break;
      }
    }
  }
  CHECK(noncommuting);
  // s*r*s = r^-1 with the element layout e,r,r2,s,sr,sr2.
  CHECK(d3.mul(3, d3.mul(1, 3)) == d3.inverse(1));

  CHECK_THROWS_AS(FiniteGroup::dihedral(0), InvalidParameterError);
}

TEST_CASE("symmetric groups") {
  CHECK(FiniteGroup::symmetric(1).order() == 1);
  CHECK(FiniteGroup::symmetric(2).order() == 2);

  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);  // lexicographically first one-line word
  // Lexicographic element order: 123, 132, 213, 231, 312, 321.
  CHECK(s3.name(0) == "123");
  CHECK(s3.name(3) == "231");
  // Composition applies the right factor first: [1,0,2] o [0,2,1] maps
  // 0->1, 1->2, 2->0, which is one-line 231 at index 3.
  CHECK(s3.mul(2, 1) == 3);

  bool noncommuting = false;
  for (int i = 0; i < 6 && !noncommuting; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (s3.mul(i, j) != s3.mul(j, i)) {
        noncommuting = true;
        break;
      }
    }
  }
  CHECK(noncommuting);

  CHECK_THROWS_AS(FiniteGroup::symmetric(0), InvalidParameterError);
  CHECK_THROWS_AS(FiniteGroup::symmetric(9), InvalidParameterError);
}

TEST_CASE("direct products") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  const FiniteGroup p = FiniteGroup::direct_product(z2, z3);
  CHECK(p.order() == 6);
  // Z_2 x Z_3 is cyclic of order 6: some element has order 6.
  bool has_order6 = false;
  for (int i = 0; i < 6; ++i) {
    if (element_order(p, i) == 6) has_order6 = true;
  }
  CHECK(has_order6);

  // trivial x G has G's table up to the identity relabeling (which is none).
  const FiniteGroup t = FiniteGroup::direct_product(FiniteGroup::cyclic(1), z3);
  CHECK(t.table().table == z3.table().table);

  // Z_2 x Z_2: every non-identity element has order 2.
  const FiniteGroup klein = FiniteGroup::direct_product(z2, z2);
  for (int i = 0; i < 4; ++i) {
    CHECK(element_order(klein, i) == (i == klein.identity() ? 1 : 2));
  }
}

TEST_CASE("multiply semantics and bounds") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  // (residue 1) * (residue 2) = identity.
  CHECK(z3.mul(1, 2) == 0);
  for (const auto& [name, g] : testutil::builtin_groups()) {
    CAPTURE(name);
    for (int j = 0; j < g.order(); ++j) {
      CHECK(g.mul(g.identity(), j) == j);
      CHECK(g.mul(j, g.inverse(j)) == g.identity());
    }
  }
  CHECK_THROWS_AS(z3.mul(-1, 0), InvalidParameterError);
  CHECK_THROWS_AS(z3.mul(0, 3), InvalidParameterError);
  CHECK_THROWS_AS(z3.inverse(3), InvalidParameterError);
}

TEST_CASE("left translations form an injective homomorphic image") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  CHECK(z3.left_translation(z3.identity()) == Permutation::identity(3));
  CHECK(z3.left_translation(1).image == std::vector<int>{1, 2, 0});

  for (const auto& [name, g] : testutil::builtin_groups()) {
    CAPTURE(name);
    const int n = g.order();
    std::vector<Permutation> sigma;
    sigma.reserve(n);
    for (int k = 0; k < n; ++k) {
      sigma.push_back(g.left_translation(k));
      CHECK(sigma.back().is_bijection());
    }
    // Homomorphism on all pairs: sigma_{k*l} = sigma_k o sigma_l.
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        CHECK(sigma[g.mul(k, l)] == sigma[k].compose(sigma[l]));
      }
    }
    // Injectivity (Cayley embedding).
    std::set<std::vector<int>> images;
    for (const auto& s : sigma) images.insert(s.image);
    CHECK(static_cast<int>(images.size()) == n);
  }
}

TEST_CASE("validate_group accepts every built-in constructor output") {
  for (const auto& [name, g] : testutil::builtin_groups()) {
    CAPTURE(name);
    const auto report = validate_group(g.table());
    CHECK(report.is_group);
    CHECK(report.associativity_checked);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("validation reports the violated axioms with witnesses") {
  SUBCASE("latin violation") {
    // Z_2's table with the top-left cell overwritten: row 1 = [2, 2].
    CayleyTable t;
    t.n = 2;
    t.table = {1, 1, 1, 0};
    const auto report = validate_group(t);
    CHECK_FALSE(report.is_group);
    bool has_latin = false, has_identity = false;
    for (const auto& v : report.violations) {
      if (v.axiom == "latin_row" || v.axiom == "latin_col") has_latin = true;
      if (v.axiom == "identity") has_identity = true;
    }
    CHECK(has_latin);
    CHECK(has_identity);
  }

  SUBCASE("column not a permutation") {
    const auto t = parse_cayley_table_raw("2\n1 2\n2 2");
    const auto report = validate_group(t);
    CHECK_FALSE(report.is_group);
    bool has_latin = false;
    for (const auto& v : report.violations) {
      if (v.axiom == "latin_row" || v.axiom == "latin_col") has_latin = true;
    }
    CHECK(has_latin);
  }

  SUBCASE("non-associative Latin square of order 5") {
    const auto t = testutil::nonassoc_latin5();
    const auto report = validate_group(t);
    CHECK_FALSE(report.is_group);
    const GroupViolation* assoc = nullptr;
    for (const auto& v : report.violations) {
      if (v.axiom == "associativity") assoc = &v;
    }
    REQUIRE(assoc != nullptr);
    REQUIRE(assoc->witness.size() == 3);
    const auto [i, j, k] = std::array{assoc->witness[0], assoc->witness[1], assoc->witness[2]};
    CHECK(t.at(t.at(i, j), k) != t.at(i, t.at(j, k)));
    // First witness in lexicographic order is (2,1,1) in 1-based terms.
    CHECK(assoc->witness == std::vector<int>{1, 0, 0});
  }

  SUBCASE("out-of-range entries violate the precondition") {
    CayleyTable t;
    t.n = 2;
    t.table = {0, 1, 1, 7};
    CHECK_THROWS_AS(validate_group(t), InvalidParameterError);
  }
}

TEST_CASE("associativity scan limit is configurable") {
  const FiniteGroup z8 = FiniteGroup::cyclic(8);
  ValidateOptions opts;
  opts.assoc_order_limit = 4;
  auto report = validate_group(z8.table(), opts);
  CHECK(report.is_group);
  CHECK_FALSE(report.associativity_checked);
  opts.force_assoc = true;
  report = validate_group(z8.table(), opts);
  CHECK(report.associativity_checked);
}

TEST_CASE("parallel and serial associativity scans agree on the first witness") {
  const auto latin5 = testutil::nonassoc_latin5();
  const auto serial = reference::associativity_witness(latin5);
  REQUIRE(serial.has_value());
  CHECK(*serial == std::array<int, 3>{1, 0, 0});
  const auto report = validate_group(latin5);
  for (const auto& v : report.violations) {
    if (v.axiom == "associativity") {
      CHECK(v.witness == std::vector<int>(serial->begin(), serial->end()));
    }
  }
  CHECK_FALSE(reference::associativity_witness(FiniteGroup::cyclic(6).table()).has_value());
}

TEST_CASE("Cayley table parsing") {
  SUBCASE("basic table") {
    const FiniteGroup g = parse_cayley_table("2\n1 2\n2 1\n");
    CHECK(g.order() == 2);
    CHECK(g.identity() == 0);
  }
  SUBCASE("identity need not sit at index 1") {
    const FiniteGroup g = parse_cayley_table("2\n2 1\n1 2\n");
    CHECK(g.identity() == 1);
  }
  SUBCASE("comments and names") {
    const FiniteGroup g = parse_cayley_table("# a comment\n2\n1 2\n2 1\n# names: e s\n");
    CHECK(g.name(0) == "e");
    CHECK(g.name(1) == "s");
  }
  SUBCASE("axiom failure carries the report") {
    try {
      parse_cayley_table("2\n1 2\n2 2");
      FAIL("expected GroupValidationError");
    } catch (const GroupValidationError& e) {
      CHECK_FALSE(e.report.is_group);
      CHECK_FALSE(e.report.violations.empty());
    }
  }
  SUBCASE("syntax errors carry line numbers") {
    CHECK_THROWS_AS(parse_cayley_table("abc"), ParseError);
    CHECK_THROWS_AS(parse_cayley_table(""), ParseError);
    CHECK_THROWS_AS(parse_cayley_table("3\n1 2 3\n2 3 1"), ParseError);
    CHECK_THROWS_AS(parse_cayley_table("2\n1 2\n2 3"), ParseError);
    CHECK_THROWS_AS(parse_cayley_table("2\n1 2 1\n2 1"), ParseError);
    CHECK_THROWS_AS(parse_cayley_table("2\n1 2\n2 1\n# names: a\n"), ParseError);
    CHECK_THROWS_AS(parse_cayley_table("2\n1 2\n2 1\n1\n"), ParseError);
    try {
      parse_cayley_table("2\n1 2\n2 3");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
}

TEST_CASE("serialize/parse round trip reproduces the group exactly") {
  CHECK(serialize_cayley_table(FiniteGroup::cyclic(2)) == "2\n1 2\n2 1\n# names: 0 1\n");
  for (const auto& [name, g] : testutil::builtin_groups()) {
    CAPTURE(name);
    const FiniteGroup back = parse_cayley_table(serialize_cayley_table(g));
    CHECK(back == g);
    CHECK(back.identity() == g.identity());
    CHECK(back.table().names == g.table().names);
  }
}

TEST_CASE("element orders") {
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  CHECK(element_order(z6, 0) == 1);
  CHECK(element_order(z6, 1) == 6);
  CHECK(element_order(z6, 2) == 3);
  CHECK(element_order(z6, 3) == 2);
  const FiniteGroup d3 = FiniteGroup::dihedral(3);
  CHECK(element_order(d3, 3) == 2);  // reflection
}
