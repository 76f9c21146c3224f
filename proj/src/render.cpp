#include "ltimes/render.hpp"

#include <sstream>

namespace ltimes {

OrderedJson to_json(const TruncatedSeries& s) {
    OrderedJson arr = OrderedJson::array();
    for (std::size_t i = 0; i <= s.truncation_degree(); ++i)
        arr.push_back(s[i].get_str());
    return arr;
}

OrderedJson to_json(const BettiSeries& s) { return to_json(s.series()); }

OrderedJson to_json(const StructureFlags& f) {
    OrderedJson obj;
    obj["regular"] = to_string(f.regular);
    obj["hypersurface"] = to_string(f.hypersurface);
    obj["complete_intersection"] = to_string(f.complete_intersection);
    obj["gorenstein"] = to_string(f.gorenstein);
    obj["cohen_macaulay"] = to_string(f.cohen_macaulay);
    return obj;
}

OrderedJson to_json(const StructureVerdict& v) {
    OrderedJson obj;
    obj["property"] = to_string(v.property);
    obj["verdict"] = to_string(v.verdict);
    obj["certificate"] = v.certificate;
    return obj;
}

OrderedJson to_json(const Witness& w) {
    OrderedJson obj;
    obj["index"] = w.index;
    obj["lhs"] = w.lhs.get_str();
    obj["rhs"] = w.rhs.get_str();
    return obj;
}

OrderedJson to_json(const ConjectureReport& r) {
    OrderedJson obj;
    obj["conjecture"] = to_string(r.conjecture);
    obj["verdict"] = to_string(r.verdict);
    OrderedJson witnesses = OrderedJson::array();
    for (const Witness& w : r.witnesses)
        witnesses.push_back(to_json(w));
    obj["witnesses"] = std::move(witnesses);
    obj["derived_facts"] = r.derived_facts;
    obj["narrative"] = r.narrative;
    return obj;
}

OrderedJson to_json(const CiFractionDiagnostic& d) {
    OrderedJson obj;
    obj["defined"] = d.defined;
    obj["value"] = d.defined ? d.value.get_str() : "undefined";
    obj["eq1_verdict"] = to_string(d.eq1_verdict);
    obj["discrepancy"] = d.discrepancy;
    obj["report"] = d.report;
    return obj;
}

OrderedJson report_envelope(const std::string& command) {
    OrderedJson obj;
    obj["schema_version"] = kReportSchemaVersion;
    obj["command"] = command;
    return obj;
}

std::string coefficients_line(const BettiSeries& s) {
    std::ostringstream out;
    for (std::size_t i = 0; i <= s.truncation_degree(); ++i) {
        if (i) out << ' ';
        out << s[i];
    }
    return out.str();
}

} // namespace ltimes
