#include <catch2/catch_amalgamated.hpp>

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qpring/classification.hpp"
#include "qpring/cli.hpp"
#include "qpring/harness.hpp"
#include "qpring/ring_io.hpp"
#include "qpring/subsets.hpp"

using namespace qpring;

// Each test case below is one acceptance criterion. It prints exactly one
// [PASS]/[FAIL] line so the binary doubles as a checklist when run directly.

namespace {

void conclude(int num, const char* label, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << label;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    REQUIRE(ok);
}

struct Corpus {
    std::vector<FiniteGeneralRing> rings;
    std::vector<std::string> names;
};

const Corpus& corpus() {
    static const Corpus c = [] {
        Corpus out;
        for (const auto& expr : default_corpus()) {
            out.rings.push_back(eval(expr));
            out.names.push_back(canonical_name(expr));
        }
        return out;
    }();
    return c;
}

std::vector<Idx> ids(std::initializer_list<int> xs) {
    std::vector<Idx> v;
    for (int x : xs) v.push_back(static_cast<Idx>(x));
    return v;
}

} // namespace

TEST_CASE("acceptance 1") {
    std::ostringstream out, err;
    int code = run_cli({"verify"}, out, err);
    bool ok = code == 0 && out.str().find("failed=0 skipped=") != std::string::npos &&
              err.str().empty();
    conclude(1, "full default-corpus verification reports zero failures", ok,
             "exit " + std::to_string(code));
}

TEST_CASE("acceptance 2") {
    bool ok = true;
    std::string detail;
    for (const auto& r : corpus().rings) {
        SubsetCache cache(r);
        const auto& q = cache.set(SetKind::Q);
        const auto& qn = cache.set(SetKind::QN);
        for (Idx a = 0; a < r.order() && ok; ++a) {
            ElementSet c2 = comm2(r, a);
            int spectral = 0, inverses = 0;
            for (Idx x = 0; x < r.order(); ++x) {
                if (c2.test(x) && r.mul(x, x) == x && q.test(r.add(a, x)) &&
                    qn.test(r.sub(a, r.mul(a, x))))
                    ++spectral;
                if (c2.test(x) && r.mul(a, r.mul(x, x)) == x &&
                    qn.test(r.sub(r.mul(r.mul(a, a), x), a)))
                    ++inverses;
            }
            if (spectral > 1 || inverses > 1) {
                ok = false;
                detail = r.name() + " element " + std::to_string(a);
            }
        }
        if (!ok) break;
    }
    conclude(2, "witness scans are unambiguous corpus-wide", ok, detail);
}

TEST_CASE("acceptance 3") {
    bool ok = true;
    int agreements = 0;
    std::string detail;
    for (const auto& r : corpus().rings) {
        SubsetCache cache(r);
        for (Idx a = 0; a < r.order(); ++a) {
            auto cert = quasipolar(cache, a);
            auto gd = gdrazin_inverse(cache, a);
            if (cert.has_value() != gd.has_value() || (cert && cert->b != *gd)) {
                ok = false;
                detail = r.name() + " element " + std::to_string(a);
            }
            if (cert) ++agreements;
        }
    }
    ok = ok && agreements > 0;
    conclude(3, "certificate b agrees with the independent inverse everywhere", ok, detail);
}

TEST_CASE("acceptance 4") {
    bool ok = true;

    FiniteGeneralRing z4 = zmod(4);
    SubsetCache c4(z4);
    ok = ok && c4.set(SetKind::Q).to_vector() == ids({0, 2});
    ok = ok && c4.set(SetKind::QN).to_vector() == ids({0, 2});
    ok = ok && c4.set(SetKind::J).to_vector() == ids({0, 2});
    for (Idx a = 0; a < 4; ++a) {
        auto gd = gdrazin_inverse(c4, a);
        ok = ok && gd.has_value() && *gd == ids({0, 1, 0, 3})[a];
    }
    ok = ok && !strongly_regular(c4, 2).has_value();

    FiniteGeneralRing z6 = zmod(6);
    SubsetCache c6(z6);
    ok = ok && c6.set(SetKind::QN).to_vector() == ids({0});
    ok = ok && c6.set(SetKind::Q).to_vector() == ids({0, 2});
    for (Idx a = 0; a < 6; ++a) ok = ok && strongly_regular(c6, a).has_value();

    FiniteGeneralRing even8 = eval_ring_expr("Ideal (Zmod 8) a=2");
    SubsetCache ce(even8);
    ok = ok && ce.set(SetKind::Q).count() == 4;

    FiniteGeneralRing m2 = eval_ring_expr("Mat 2 (Zmod 2)");
    SubsetCache cm(m2);
    ok = ok && cm.set(SetKind::Nil).to_vector() == ids({0, 2, 4, 15});
    ok = ok && cm.set(SetKind::J).to_vector() == ids({0});
    ok = ok && cm.set(SetKind::Units).count() == 6;

    FiniteGeneralRing pr = eval_ring_expr("PairRing (Zmod 4)");
    SubsetCache cp(pr);
    ok = ok && cp.set(SetKind::Idem).to_vector() == ids({0, 4, 5, 6, 7});

    conclude(4, "frozen golden values hold", ok);
}

TEST_CASE("acceptance 5") {
    bool ok = true;
    std::string detail;
    for (const auto& r : corpus().rings) {
        SubsetCache cache(r);
        if (!(cache.set(SetKind::QN) == cache.set(SetKind::Nil))) {
            ok = false;
            detail = r.name() + " QN != Nil";
            break;
        }
        for (Idx a = 0; a < r.order(); ++a) {
            bool here = quasipolar(cache, a).has_value() && strongly_clean(cache, a).has_value();
            here = here && strongly_pi_regular(cache, a).verify(cache, a);
            if (r.is_unital())
                here = here && pseudopolar(cache, a).has_value() &&
                       strongly_pi_rad_clean(cache, a).has_value();
            if (!here) {
                ok = false;
                detail = r.name() + " element " + std::to_string(a);
                break;
            }
        }
        if (!ok) break;
    }
    conclude(5, "finite-ring classifications are exhaustive", ok, detail);
}

TEST_CASE("acceptance 6") {
    bool ok = true;
    std::string detail;

    TheoremReport corner_rep = run_suite(default_corpus(), {"L3.4"});
    ok = corner_rep.total.failed == 0 && corner_rep.total.skipped == 0;
    std::map<std::string, int> per_ring;
    for (const auto& rec : corner_rep.records) ++per_ring[rec.ring];
    for (std::size_t i = 0; i < corpus().rings.size(); ++i) {
        SubsetCache cache(corpus().rings[i]);
        int idems = static_cast<int>(cache.set(SetKind::Idem).count());
        if (per_ring[corpus().names[i]] != idems) {
            ok = false;
            detail = corpus().names[i] + " missing idempotent records";
        }
    }

    int non_unital = 0;
    for (const auto& r : corpus().rings) {
        if (r.is_unital()) continue;
        ++non_unital;
        SubsetCache cache(r);
        auto recs = check_prop31(r, cache);
        if (recs.size() != r.order()) {
            ok = false;
            detail = r.name() + " extension bridge incomplete";
        }
        for (const auto& rec : recs)
            if (rec.status != CheckStatus::Pass) {
                ok = false;
                detail = r.name() + " extension bridge failed";
            }
    }
    ok = ok && non_unital == 3;

    conclude(6, "corner and extension transfers hold per idempotent and per ring", ok, detail);
}

TEST_CASE("acceptance 7") {
    TheoremReport rep = run_suite(default_corpus(), {"L2.1"});
    bool ok = rep.total.failed == 0 && rep.total.checked == 167 && rep.total.skipped == 3;
    ok = ok &&
         rep.serialize().find("CHECK L2.1 Zmod4 2 pass pg=0 pu=1\n") != std::string::npos;
    conclude(7, "general and unital quasipolar forms agree on unital rings", ok);
}

TEST_CASE("acceptance 8") {
    bool ok = true;
    std::string detail;

    auto expect_kind = [&](std::vector<Idx> add, std::vector<Idx> mul, AxiomKind kind,
                           const char* what) {
        const Idx order = static_cast<Idx>(add.size() == 9 ? 3 : 2);
        try {
            build_ring(order, std::move(add), std::move(mul));
            ok = false;
            detail = std::string(what) + " accepted";
        } catch (const AxiomViolation& e) {
            if (e.kind() != kind) {
                ok = false;
                detail = std::string(what) + " rejected for the wrong reason";
            }
        }
    };

    expect_kind({0, 1, 1, 1}, {0, 0, 0, 0}, AxiomKind::MissingNegative, "saturating add");
    expect_kind({0, 1, 1, 0}, {1, 1, 1, 1}, AxiomKind::DistributivityFailure, "constant mul");
    expect_kind({0, 1, 2, 1, 2, 1, 2, 0, 1}, {0, 0, 0, 0, 1, 2, 0, 2, 1},
                AxiomKind::AddNotAssociative, "tampered modular add");

    for (std::size_t i = 0; i < corpus().rings.size() && ok; ++i) {
        const auto& r = corpus().rings[i];
        std::string text = dump_ring(r);
        FiniteGeneralRing back = parse_ring_file(text);
        if (dump_ring(back) != text) {
            ok = false;
            detail = corpus().names[i] + " round-trip drifted";
        }
    }

    conclude(8, "invalid tables are rejected and dumps round-trip", ok, detail);
}
