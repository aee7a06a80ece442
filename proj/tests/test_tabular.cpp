#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "csv.hpp"
#include "errors.hpp"
#include "support/fixtures.hpp"
#include "transformer.hpp"

using namespace fairtab;
using namespace fairtab::test;

namespace {

Table small_mixed_table() {
    TableBuilder b;
    b.numeric("a", {1, 2, 3, 4, 5})
        .numeric("b", {10, 10, 10, 10, 10})
        .numeric("c", {0.5, -1.5, 2.5, 0.0, 3.0})
        .categorical("d", {"w", "x", "y", "z"}, {0, 1, 2, 3, 0})
        .categorical("e", {"no", "yes"}, {0, 1, 0, 1, 1});
    return b.build();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("fit derives the layout arithmetic N_C, l_i, l_w") {
    Table t = small_mixed_table();
    auto ft = FittedTransformer::fit(t);
    CHECK(ft.numeric_count() == 3);
    CHECK(ft.categorical_count() == 2);
    CHECK(ft.cat_widths()[0] == 4);
    CHECK(ft.cat_widths()[1] == 2);
    CHECK(ft.width() == 9);
    CHECK(ft.cat_offset(0) == 3);
    CHECK(ft.cat_offset(1) == 7);
}

TEST_CASE("fit rejects an empty table") {
    TableBuilder b;
    b.numeric("a", {});
    CHECK_THROWS_AS(FittedTransformer::fit(b.build()), SchemaError);
}

TEST_CASE("transform uses midpoint ranks") {
    TableBuilder b;
    b.numeric("a", {1, 2, 3, 4, 5});
    auto ft = FittedTransformer::fit(b.build());
    CHECK(ft.transform_numeric(0, 3.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ft.transform_numeric(0, 1.0) == doctest::Approx(0.1).epsilon(1e-15));   // (1-0.5)/5
    CHECK(ft.transform_numeric(0, 5.0) == doctest::Approx(0.9).epsilon(1e-15));
    // below the training minimum: clamp to 0.5/n
    CHECK(ft.transform_numeric(0, -100.0) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(ft.transform_numeric(0, 100.0) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK_THROWS_AS(ft.transform_numeric(0, std::nan("")), DomainError);
}

TEST_CASE("a constant column maps everything to 0.5") {
    TableBuilder b;
    b.numeric("a", {7, 7, 7, 7});
    auto ft = FittedTransformer::fit(b.build());
    CHECK(ft.transform_numeric(0, 7.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ft.inverse_numeric(0, 0.123) == 7.0);
}

TEST_CASE("ties map to the midpoint rank of the tied block") {
    TableBuilder b;
    b.numeric("a", {1, 1, 2});
    auto ft = FittedTransformer::fit(b.build());
    // block [1,1] has average rank 1.5 -> (1.5-0.5)/3
    CHECK(ft.transform_numeric(0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(ft.transform_numeric(0, 2.0) == doctest::Approx(2.5 / 3.0).epsilon(1e-15));
}

TEST_CASE("inverse transform round-trips training values and clamps overflow") {
    TableBuilder b;
    b.numeric("a", {3.5, -2.0, 11.0, 0.25, 8.0});
    auto ft = FittedTransformer::fit(b.build());
    for (double v : {3.5, -2.0, 11.0, 0.25, 8.0})
        CHECK(ft.inverse_numeric(0, ft.transform_numeric(0, v)) == v);
    CHECK(ft.inverse_numeric(0, 1.7) == 11.0);   // generator overflow clamps to max
    CHECK(ft.inverse_numeric(0, -0.3) == -2.0);
}

TEST_CASE("quantile function is monotone on a uniform grid") {
    std::vector<double> vals;
    for (int i = 1; i <= 100; ++i) vals.push_back(i);
    TableBuilder b;
    b.numeric("a", vals);
    auto ft = FittedTransformer::fit(b.build());
    double prev = -1e300;
    for (int i = 0; i <= 100; ++i) {
        const double q = ft.inverse_numeric(0, i / 100.0);
        CHECK(q >= prev);
        prev = q;
    }
}

TEST_CASE("transform is monotone and strictly increasing on distinct training values") {
    Rng rng(41);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> vals;
        const std::size_t n = 2 + rng.index(40);
        for (std::size_t i = 0; i < n; ++i)
            vals.push_back(std::round(rng.uniform(-50, 50)));
        TableBuilder b;
        b.numeric("a", vals);
        auto ft = FittedTransformer::fit(b.build());
        std::vector<double> sorted = vals;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            const double f0 = ft.transform_numeric(0, sorted[i - 1]);
            const double f1 = ft.transform_numeric(0, sorted[i]);
            if (sorted[i - 1] == sorted[i]) CHECK(f0 == f1);
            else CHECK(f0 < f1);
        }
        // random probes stay ordered too
        double x0 = rng.uniform(-60, 60), x1 = rng.uniform(-60, 60);
        if (x0 > x1) std::swap(x0, x1);
        CHECK(ft.transform_numeric(0, x0) <= ft.transform_numeric(0, x1));
    }
}

TEST_CASE("encode produces one-hots and [0,1] numerics; decode inverts") {
    Table t = small_mixed_table();
    auto ft = FittedTransformer::fit(t);
    Tensor enc = ft.encode(t);
    REQUIRE(enc.dim(0) == 5);
    REQUIRE(enc.dim(1) == 9);
    // category "x" (code 1) of vocab [w,x,y,z] -> block [0,1,0,0]
    CHECK(enc.at(1, 3) == 0.0);
    CHECK(enc.at(1, 4) == 1.0);
    CHECK(enc.at(1, 5) == 0.0);
    CHECK(enc.at(1, 6) == 0.0);
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(enc.at(r, j) >= 0.0);
            CHECK(enc.at(r, j) <= 1.0);
        }
        // categorical blocks are exact one-hots
        double s1 = 0, s2 = 0;
        for (std::size_t j = 3; j < 7; ++j) s1 += enc.at(r, j);
        for (std::size_t j = 7; j < 9; ++j) s2 += enc.at(r, j);
        CHECK(s1 == 1.0);
        CHECK(s2 == 1.0);
    }

    Table back = ft.decode(enc);
    for (std::size_t r = 0; r < 5; ++r) {
        CHECK(back.cols[3].cat[r] == t.cols[3].cat[r]);
        CHECK(back.cols[4].cat[r] == t.cols[4].cat[r]);
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(std::fabs(back.cols[c].num[r] - t.cols[c].num[r]) <= 1e-9);
    }
}

TEST_CASE("soft categorical blocks decode by argmax") {
    TableBuilder b;
    b.categorical("d", {"a", "b", "c"}, {0});
    auto ft = FittedTransformer::fit(b.build());
    Tensor soft({1, 3}, {0.2, 0.5, 0.3});
    Table out = ft.decode(soft);
    CHECK(out.cols[0].cat[0] == 1);  // "b"
}

TEST_CASE("decode rejects a wrong batch width") {
    auto ft = FittedTransformer::fit(small_mixed_table());
    CHECK_THROWS_AS(ft.decode(Tensor({2, 5})), DimensionError);
}

TEST_CASE("layout bookkeeping holds for random schemas") {
    Rng rng(43);
    for (int rep = 0; rep < 200; ++rep) {
        TableBuilder b;
        const std::size_t nnum = rng.index(4);
        const std::size_t ncat = 1 + rng.index(4);
        std::size_t want = nnum;
        for (std::size_t i = 0; i < nnum; ++i)
            b.numeric("n" + std::to_string(i), {rng.normal(), rng.normal(), rng.normal()});
        for (std::size_t i = 0; i < ncat; ++i) {
            const std::size_t k = 2 + rng.index(5);
            want += k;
            std::vector<std::string> vocab;
            for (std::size_t j = 0; j < k; ++j) vocab.push_back("v" + std::to_string(j));
            b.categorical("c" + std::to_string(i), vocab,
                          {static_cast<std::int32_t>(rng.index(k)),
                           static_cast<std::int32_t>(rng.index(k)),
                           static_cast<std::int32_t>(rng.index(k))});
        }
        auto ft = FittedTransformer::fit(b.build());
        CHECK(ft.width() == want);
        Tensor enc = ft.encode(b.build());
        CHECK(enc.dim(1) == want);
    }
}

TEST_CASE("normal output distribution round-trips too") {
    TableBuilder b;
    b.numeric("a", {1, 2, 3, 4, 5, 6, 7, 8});
    auto ft = FittedTransformer::fit(b.build(), OutputDist::Normal);
    for (double v : {1.0, 4.0, 8.0}) {
        const double z = ft.transform_numeric(0, v);
        CHECK(std::isfinite(z));
        CHECK(ft.inverse_numeric(0, z) == doctest::Approx(v).epsilon(1e-9));
    }
    // median maps to ~0 under the normal target
    CHECK(std::fabs(ft.transform_numeric(0, 4.5)) < 1e-9);
}

TEST_CASE("transformer persistence is bit-exact") {
    Table t = make_biased_toy(40, 0.3, 5);
    auto ft = FittedTransformer::fit(t);
    const std::string p1 = "ft_test_a.ftt", p2 = "ft_test_b.ftt";
    ft.save(p1, "meta v1");
    std::string meta;
    auto loaded = FittedTransformer::load(p1, &meta);
    CHECK(meta == "meta v1");
    loaded.save(p2, meta);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(loaded.width() == ft.width());
    // loaded transformer encodes identically
    Tensor e1 = ft.encode(t), e2 = loaded.encode(t);
    for (std::size_t i = 0; i < e1.size(); ++i) CHECK(e1[i] == e2[i]);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("fairness block positions are resolved from the schema") {
    Table t = make_biased_toy(10, 0.2, 9);
    auto ft = FittedTransformer::fit(t);
    auto fb = ft.fairness_blocks();
    // layout: x1 x2 | group(u,p) | channel(a,b,c) | outcome(no,yes)
    CHECK(fb.unpriv_col == 2);
    CHECK(fb.priv_col == 3);
    CHECK(fb.favorable_col == 8);
}

TEST_CASE("csv round trip preserves tables") {
    Table t = make_biased_toy(25, 0.3, 11);
    const std::string path = "csv_roundtrip_test.csv";
    write_table_csv(t, path);
    Table back = read_table_csv(path, t.schema);
    REQUIRE(back.rows() == t.rows());
    for (std::size_t c = 0; c < t.cols.size(); ++c) {
        for (std::size_t r = 0; r < t.rows(); ++r) {
            if (t.schema.columns[c].kind == ColumnKind::Numeric)
                CHECK(back.cols[c].num[r] == t.cols[c].num[r]);
            else
                CHECK(back.cols[c].cat[r] == t.cols[c].cat[r]);
        }
    }
    std::remove(path.c_str());
}

TEST_CASE("csv loader reports missing columns and bad cells") {
    const std::string path = "csv_bad_test.csv";
    {
        std::ofstream out(path);
        out << "a,b\n1,hello\n";
    }
    TableSchema wants;
    wants.columns = {{"a", ColumnKind::Numeric, {}}, {"missing", ColumnKind::Numeric, {}}};
    CHECK_THROWS_AS(read_table_csv(path, wants), SchemaError);

    TableSchema bad_cell;
    bad_cell.columns = {{"a", ColumnKind::Numeric, {}}, {"b", ColumnKind::Numeric, {}}};
    CHECK_THROWS_AS(read_table_csv(path, bad_cell), SchemaError);
    std::remove(path.c_str());
}

TEST_CASE("schema validation catches duplicate names and non-binary designations") {
    TableSchema s;
    s.columns = {{"a", ColumnKind::Numeric, {}}, {"a", ColumnKind::Numeric, {}}};
    CHECK_THROWS_AS(s.validate(), SchemaError);

    TableBuilder b;
    b.numeric("x", {1, 2}).categorical("s", {"p", "q", "r"}, {0, 1});
    Table t = b.build();
    t.schema.protected_column = "s";
    t.schema.underprivileged_value = "p";
    t.schema.label_column = "s";
    t.schema.favorable_value = "q";
    CHECK_THROWS_AS(t.schema.validate(), SchemaError);
}
