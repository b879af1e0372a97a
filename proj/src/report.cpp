#include "jseq/report.hpp"

#include <ctime>
#include <json.hpp>
#include <sstream>

#include "jseq/errors.hpp"

namespace jseq {

using json = nlohmann::ordered_json;

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::pass: return "pass";
        case Outcome::fail: return "fail";
        default: return "unresolved";
    }
}

static Outcome outcome_from(const std::string& s) {
    if (s == "pass") return Outcome::pass;
    if (s == "fail") return Outcome::fail;
    if (s == "unresolved") return Outcome::unresolved;
    throw ParseError("unknown outcome '" + s + "'", 1);
}

Summary CheckBlock::summary() const {
    Summary s;
    for (const auto& e : entries) {
        if (e.outcome == Outcome::pass) ++s.pass;
        else if (e.outcome == Outcome::fail) ++s.fail;
        else ++s.unresolved;
    }
    return s;
}

bool CheckBlock::all_pass() const {
    Summary s = summary();
    return s.fail == 0 && s.unresolved == 0;
}

Summary VerificationReport::total() const {
    Summary t;
    for (const auto& c : checks) {
        Summary s = c.summary();
        t.pass += s.pass;
        t.fail += s.fail;
        t.unresolved += s.unresolved;
    }
    return t;
}

static json entry_to_json(const CheckEntry& e) {
    json j;
    if (e.label.empty())
        j["n"] = e.n;
    else
        j["label"] = e.label;
    j["outcome"] = outcome_name(e.outcome);
    if (e.precision_used > 0) j["precision"] = e.precision_used;
    if (e.below_threshold) j["below_threshold"] = true;
    if (!e.witnesses.empty()) {
        json w = json::object();
        for (const auto& wit : e.witnesses) w[wit.name] = wit.value;
        j["witnesses"] = w;
    }
    return j;
}

std::string report_to_json(const VerificationReport& r) {
    json j;
    j["schema"] = r.schema;
    j["tool"] = r.tool;
    j["timestamp"] = r.timestamp;
    j["command"] = r.command;
    j["parameters"] = json::object();
    for (const auto& [k, v] : r.parameters) j["parameters"][k] = v;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        json cb;
        cb["check"] = c.check;
        if (c.n_to >= c.n_from) {
            cb["n_from"] = c.n_from;
            cb["n_to"] = c.n_to;
        }
        if (!c.notes.empty()) {
            cb["notes"] = json::object();
            for (const auto& [k, v] : c.notes) cb["notes"][k] = v;
        }
        Summary s = c.summary();
        cb["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"unresolved", s.unresolved}};
        cb["elapsed_ms"] = c.elapsed_ms;
        cb["entries"] = json::array();
        for (const auto& e : c.entries) cb["entries"].push_back(entry_to_json(e));
        j["checks"].push_back(std::move(cb));
    }
    Summary t = r.total();
    j["summary"] = {{"pass", t.pass}, {"fail", t.fail}, {"unresolved", t.unresolved}};
    return j.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "check,key,outcome,precision,below_threshold\n";
    for (const auto& c : r.checks)
        for (const auto& e : c.entries)
            out << c.check << ',' << e.key() << ',' << outcome_name(e.outcome) << ','
                << e.precision_used << ',' << (e.below_threshold ? 1 : 0) << '\n';
    return out.str();
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << r.tool << " " << r.command << " at " << r.timestamp << "\n";
    for (const auto& c : r.checks) {
        Summary s = c.summary();
        out << c.check << ": " << s.pass << " pass, " << s.fail << " fail, " << s.unresolved
            << " unresolved\n";
        for (const auto& e : c.entries) {
            if (e.outcome == Outcome::pass) continue;
            out << "  " << e.key() << ": " << outcome_name(e.outcome)
                << (e.below_threshold ? " (below validity threshold)" : "");
            for (const auto& w : e.witnesses) out << "  " << w.name << "=" << w.value;
            out << "\n";
        }
    }
    Summary t = r.total();
    out << "total: " << t.pass << " pass, " << t.fail << " fail, " << t.unresolved
        << " unresolved\n";
    return out.str();
}

VerificationReport report_parse_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what(), 1);
    }
    VerificationReport r;
    try {
        r.schema = j.at("schema").get<std::string>();
        if (r.schema != "jseq-report/1")
            throw ParseError("unsupported report schema '" + r.schema + "'", 1);
        r.tool = j.value("tool", "");
        r.timestamp = j.value("timestamp", "");
        r.command = j.value("command", "");
        if (j.contains("parameters"))
            for (auto& [k, v] : j["parameters"].items())
                r.parameters[k] = v.get<std::string>();
        for (auto& cj : j.at("checks")) {
            CheckBlock c;
            c.check = cj.at("check").get<std::string>();
            c.n_from = cj.value("n_from", 0L);
            c.n_to = cj.value("n_to", -1L);
            c.elapsed_ms = cj.value("elapsed_ms", 0.0);
            if (cj.contains("notes"))
                for (auto& [k, v] : cj["notes"].items()) c.notes[k] = v.get<std::string>();
            for (auto& ej : cj.at("entries")) {
                CheckEntry e;
                if (ej.contains("label"))
                    e.label = ej["label"].get<std::string>();
                else
                    e.n = ej.at("n").get<long>();
                e.outcome = outcome_from(ej.at("outcome").get<std::string>());
                e.precision_used = ej.value("precision", 0L);
                e.below_threshold = ej.value("below_threshold", false);
                if (ej.contains("witnesses"))
                    for (auto& [k, v] : ej["witnesses"].items())
                        e.witnesses.push_back({k, v.get<std::string>()});
                c.entries.push_back(std::move(e));
            }
            r.checks.push_back(std::move(c));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("report schema mismatch: ") + e.what(), 1);
    }
    return r;
}

ReportDiff report_diff(const VerificationReport& a, const VerificationReport& b) {
    ReportDiff d;
    std::map<std::pair<std::string, std::string>, Outcome> left, right;
    for (const auto& c : a.checks)
        for (const auto& e : c.entries) left[{c.check, e.key()}] = e.outcome;
    for (const auto& c : b.checks)
        for (const auto& e : c.entries) right[{c.check, e.key()}] = e.outcome;
    for (const auto& [k, v] : left) {
        auto it = right.find(k);
        if (it == right.end())
            d.lines.push_back(k.first + "[" + k.second + "]: only in first (" + outcome_name(v) + ")");
        else if (it->second != v)
            d.lines.push_back(k.first + "[" + k.second + "]: " + outcome_name(v) + " vs " +
                              outcome_name(it->second));
    }
    for (const auto& [k, v] : right)
        if (!left.count(k))
            d.lines.push_back(k.first + "[" + k.second + "]: only in second (" + outcome_name(v) + ")");
    d.identical_outcomes = d.lines.empty();
    return d;
}

std::string iso8601_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace jseq
