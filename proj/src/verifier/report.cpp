#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qrank/verifier/dyson.hpp"
#include "qrank/verifier/pipelines.hpp"
#include "qrank/verifier/report.hpp"

namespace qrank::verifier {

void write_text_report(const std::vector<CheckResult>& results, std::ostream& out)
{
    std::size_t wn = 4, wa = 6;
    for (const auto& r : results) {
        wn = std::max(wn, r.name.size());
        wa = std::max(wa, r.anchor.size());
    }
    out << std::left << std::setw(static_cast<int>(wn)) << "name" << "  " << std::setw(static_cast<int>(wa)) << "anchor"
        << "  " << std::setw(6) << "status" << "  " << std::right << std::setw(6) << "order" << "  " << std::setw(10)
        << "ms" << '\n';
    int pass = 0, fail = 0, err = 0;
    for (const auto& r : results) {
        out << std::left << std::setw(static_cast<int>(wn)) << r.name << "  " << std::setw(static_cast<int>(wa))
            << r.anchor << "  " << std::setw(6) << status_name(r.status) << "  " << std::right << std::setw(6)
            << r.order_checked << "  " << std::setw(10) << std::fixed << std::setprecision(1) << r.wall_ms << '\n';
        if (r.status == Status::fail && r.first_mismatch)
            out << "    " << r.detail << ": first mismatch at q^" << r.first_mismatch->exponent << ": "
                << r.first_mismatch->lhs << " vs " << r.first_mismatch->rhs << '\n';
        else if (r.status == Status::error)
            out << "    " << r.detail << '\n';
        pass += r.status == Status::pass;
        fail += r.status == Status::fail;
        err += r.status == Status::error;
    }
    out << pass << " passed, " << fail << " failed, " << err << " errors\n";
}

void write_json_report(const std::vector<CheckResult>& results, std::ostream& out)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json o;
        o["name"] = r.name;
        o["paper_anchor"] = r.anchor;
        o["status"] = std::string(status_name(r.status));
        o["order_checked"] = r.order_checked;
        if (r.first_mismatch)
            o["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                                   {"lhs", r.first_mismatch->lhs},
                                   {"rhs", r.first_mismatch->rhs}};
        else
            o["first_mismatch"] = nullptr;
        o["wall_ms"] = r.wall_ms;
        if (!r.detail.empty())
            o["detail"] = r.detail;
        if (!r.notes.empty())
            o["notes"] = r.notes;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

void emit_report(const std::vector<CheckResult>& results, ReportFormat format, const std::string& path)
{
    auto write = [&](std::ostream& os) {
        if (format == ReportFormat::json)
            write_json_report(results, os);
        else
            write_text_report(results, os);
    };
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open report file '" + path + "'");
    write(f);
    f.close();
    if (!f)
        throw std::runtime_error("failed writing report file '" + path + "'");
}

namespace {

template <class R>
std::vector<std::pair<int, std::string>> render(const Series<R>& s)
{
    std::vector<std::pair<int, std::string>> out;
    for (int e = s.lower(); e <= s.trunc(); ++e)
        out.emplace_back(e, ring_traits<R>::to_string(s.coeff(e)));
    return out;
}

template <class F>
CatalogEntry entry(std::string name, std::string description, F build)
{
    return {std::move(name), std::move(description), [build](int N) { return render(build(N)); }};
}

ProductSpec ram_product(std::initializer_list<std::pair<int, int>> factors)
{
    ProductSpec s;
    for (auto [a, e] : factors)
        if (a == 5)
            s.J(5, e);
        else
            s.J(5, a, e);
    return s;
}

} // namespace

const std::vector<CatalogEntry>& series_catalog()
{
    using Z = Integer;
    static const std::vector<CatalogEntry> cat{
        entry("E", "(q;q)_inf", [](int N) { return product_build<Z>(presets::euler(), N); }),
        entry("theta4", "(q;q)^2/(q^2;q^2)", [](int N) { return product_build<Z>(presets::theta4(), N); }),
        entry("partitions", "1/(q;q)_inf", [](int N) { return series_inv(product_build<Z>(presets::euler(), N)); }),
        entry("detD", "J_{5,1}^4 J_{10,4}^2 + J_{5,1}^2 J_{5,2}^2 J_{10,2} J_{10,4} - J_{5,2}^4 J_{10,2}^2",
              [](int N) { return det_D(N); }),
        entry("detD_eta", "J_10^3 J_1^6 / (J_5^2 J_2)", [](int N) { return product_build<Z>(presets::det_denominator(), N); }),
        entry("R_symbolic", "R(z;q) with z kept symbolic",
              [](int N) { return rank_series_R<ZPoly>(ParamSpec::z(1), 1, RankForm::eisenstein, N); }),
        entry("R_at_zeta5", "R(zeta_5;q)",
              [](int N) { return rank_series_R<CycloNum>(ParamSpec::zeta(5, 1), 1, RankForm::eisenstein, N); }),
        entry("R_at_zeta7", "R(zeta_7;q)",
              [](int N) { return rank_series_R<CycloNum>(ParamSpec::zeta(7, 1), 1, RankForm::eisenstein, N); }),
        entry("R_at_zeta11", "R(zeta_11;q)",
              [](int N) { return rank_series_R<CycloNum>(ParamSpec::zeta(11, 1), 1, RankForm::eisenstein, N); }),
        entry("phi", "Ramanujan's phi(q)", [](int N) { return ramanujan_phi<Z>(N); }),
        entry("psi", "Ramanujan's psi(q)", [](int N) { return ramanujan_psi<Z>(N); }),
        entry("ramA", "(q^2,q^3,q^5;q^5)/(q,q^4;q^5)^2",
              [](int N) { return product_build<Z>(ram_product({{5, 2}, {2, 1}, {1, -2}}), N); }),
        entry("ramB", "(q^5;q^5)/(q,q^4;q^5)", [](int N) { return product_build<Z>(ram_product({{5, 2}, {1, -1}}), N); }),
        entry("ramC", "(q^5;q^5)/(q^2,q^3;q^5)", [](int N) { return product_build<Z>(ram_product({{5, 2}, {2, -1}}), N); }),
        entry("ramD", "(q,q^4,q^5;q^5)/(q^2,q^3;q^5)^2",
              [](int N) { return product_build<Z>(ram_product({{5, 2}, {1, 1}, {2, -2}}), N); }),
        entry("rankid1_sum", "rankid1 double sum, symbolic z",
              [](int N) { return hr_rhs<ZPoly>(HRForm::rankid1, ParamSpec::z(1), 1, N); }),
        entry("rankid3_sum", "rankid3 double sum, symbolic z",
              [](int N) { return hr_rhs<ZPoly>(HRForm::rankid3, ParamSpec::z(1), 1, N); }),
    };
    return cat;
}

const CatalogEntry* find_series(const std::string& name)
{
    for (const auto& e : series_catalog())
        if (e.name == name)
            return &e;
    return nullptr;
}

} // namespace qrank::verifier
