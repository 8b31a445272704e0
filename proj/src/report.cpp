#include "qcrank/report.hpp"

#include <json.hpp>

namespace qcrank {

using nlohmann::json;

bool ReportDocument::overall_pass() const
{
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail)
            return false;
    return true;
}

std::string render_report(const ReportDocument& doc)
{
    json checks = json::array();
    json per_check = json::object();
    for (const auto& c : doc.checks) {
        json failure = nullptr;
        if (c.first_failure)
            failure = {{"index", c.first_failure->index},
                       {"expected", c.first_failure->expected},
                       {"actual", c.first_failure->actual}};
        checks.push_back({{"id", c.id},
                          {"anchor", c.anchor},
                          {"order", c.order_used},
                          {"status", std::string(status_name(c.status))},
                          {"first_failure", failure},
                          {"runtime_ms", c.runtime_ms},
                          {"note", c.note}});
        per_check[c.id] = c.order_used;
    }
    json j = {
        {"schema_version", kReportSchemaVersion},
        {"tool_version", doc.tool_version},
        {"orders",
         {{"override", doc.order_override ? json(*doc.order_override) : json(nullptr)},
          {"per_check", per_check}}},
        {"checks", checks},
        {"overall", doc.overall_pass() ? "pass" : "fail"},
        {"wall_clock_ms", doc.wall_clock_ms},
    };
    return j.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text)
{
    json j = json::parse(text);
    ReportDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    const auto& ov = j.at("orders").at("override");
    if (!ov.is_null())
        doc.order_override = ov.get<Exponent>();
    doc.wall_clock_ms = j.value("wall_clock_ms", 0.0);
    for (const auto& c : j.at("checks")) {
        CheckResult r;
        r.id = c.at("id").get<std::string>();
        r.anchor = c.value("anchor", "");
        r.order_used = c.at("order").get<Exponent>();
        std::string status = c.at("status").get<std::string>();
        r.status = status == "pass"   ? CheckStatus::pass
                   : status == "fail" ? CheckStatus::fail
                                      : CheckStatus::skipped;
        if (const auto& f = c.at("first_failure"); !f.is_null())
            r.first_failure = FirstFailure{f.at("index").get<std::int64_t>(),
                                           f.at("expected").get<std::string>(),
                                           f.at("actual").get<std::string>()};
        r.runtime_ms = c.value("runtime_ms", 0.0);
        r.note = c.value("note", "");
        doc.checks.push_back(std::move(r));
    }
    return doc;
}

} // namespace qcrank
