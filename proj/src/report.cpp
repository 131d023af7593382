#include "qcount/report.hpp"

#include <sstream>

namespace qcount {

using nlohmann::json;

json to_json(const VerifyReport& rep) {
    json j;
    j["form"] = rep.form.to_string();
    j["a"] = rep.a;
    j["regime"] = rep.regime.tag == Regime::SquareCase ? "square" : "nonsquare";
    j["norm"] = rep.norm.name();
    json constant;
    if (rep.constant) {
        constant["value"] = rep.constant->value;
        constant["lo"] = rep.constant->lo;
        constant["hi"] = rep.constant->hi;
        json ram = json::array();
        for (const auto& alpha : rep.constant->alphas) {
            ram.push_back({{"p", alpha.p},
                           {"alpha_num", boost::multiprecision::numerator(alpha.value)
                                             .convert_to<int64_t>()},
                           {"alpha_den", boost::multiprecision::denominator(alpha.value)
                                             .convert_to<int64_t>()}});
        }
        constant["ramified"] = ram;
    } else {
        constant["value"] = rep.linear_constant;
        constant["ramified"] = json::array();
        if (rep.lvalue) {
            constant["lvalue"] = {{"delta0", rep.lvalue->delta0},
                                  {"D", rep.lvalue->D},
                                  {"value", rep.lvalue->value},
                                  {"series", rep.lvalue->method_a},
                                  {"class_number_formula", rep.lvalue->method_b},
                                  {"h", rep.lvalue->h}};
        }
    }
    j["constant"] = constant;
    json ladder = json::array();
    for (const auto& rung : rep.ladder) {
        ladder.push_back({{"T", rung.T},
                          {"count", rung.count},
                          {"predicted", rung.predicted},
                          {"ratio", rung.ratio},
                          {"elapsed_ms", rung.elapsed_ms},
                          {"breakdown",
                           {{"finite_constant", rung.breakdown.finite_constant},
                            {"arch_integral", rung.breakdown.arch_integral},
                            {"log_factor", rung.breakdown.log_factor}}}});
    }
    j["ladder"] = ladder;
    j["trend_ok"] = rep.trend_ok;
    return j;
}

double predicted_from_breakdown(const json& report, size_t idx) {
    const auto& b = report.at("ladder").at(idx).at("breakdown");
    return b.at("finite_constant").get<double>() * b.at("arch_integral").get<double>() *
           b.at("log_factor").get<double>();
}

std::string to_csv(const VerifyReport& rep) {
    std::ostringstream out;
    out.precision(17);
    out << "T,count,predicted,ratio,elapsed_ms\r\n";
    for (const auto& rung : rep.ladder) {
        out << rung.T << ',' << rung.count << ',' << rung.predicted << ',' << rung.ratio << ','
            << rung.elapsed_ms << "\r\n";
    }
    return out.str();
}

}  // namespace qcount
