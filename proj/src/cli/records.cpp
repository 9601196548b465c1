#include "abx/cli.hpp"

#include <sstream>

namespace abx {

namespace {

const char* relation_name(Relation r)
{
    switch (r) {
    case Relation::Inequality:
        return "inequality";
    case Relation::Identity:
        return "identity";
    case Relation::SetIdentity:
        return "set";
    }
    return "?";
}

// RFC 4180 quoting.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

} // namespace

CheckRecord make_record(const std::string& id, const Comparison& c, const Json& witness)
{
    CheckRecord r;
    r.instance_id = id;
    r.theorem = c.tag;
    r.label = c.label;
    r.kind = c.kind;
    r.lhs = c.lhs;
    r.rhs = c.rhs;
    // set identities compare vertex counts only for display; the verdict is the set comparison
    r.slack = c.kind == Relation::SetIdentity ? Rational(c.equal ? 0 : -1) : c.slack();
    r.equality = c.equal;
    r.pass = c.holds();
    if (!r.pass)
        r.witness = witness;
    return r;
}

Json to_json(const CheckRecord& r)
{
    Json j;
    j["instance_id"] = r.instance_id;
    j["theorem"] = r.theorem;
    j["case"] = r.label;
    j["relation"] = relation_name(r.kind);
    j["lhs"] = to_string(r.lhs);
    j["rhs"] = to_string(r.rhs);
    j["slack"] = to_string(r.slack);
    j["equality"] = r.equality;
    j["pass"] = r.pass;
    if (r.witness)
        j["witness"] = *r.witness;
    return j;
}

std::string csv_header() { return "instance_id,theorem,case,relation,lhs,rhs,slack,equality,pass,witness"; }

std::string to_csv(const CheckRecord& r)
{
    std::ostringstream os;
    os << csv_field(r.instance_id) << ',' << csv_field(r.theorem) << ',' << csv_field(r.label) << ','
       << relation_name(r.kind) << ',' << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << to_string(r.slack)
       << ',' << (r.equality ? "true" : "false") << ',' << (r.pass ? "true" : "false") << ','
       << (r.witness ? csv_field(r.witness->dump()) : "");
    return os.str();
}

std::string summary_line(const SuiteResult& r)
{
    std::ostringstream os;
    os << "suite=" << r.suite << " instances=" << r.instances << " records=" << r.records.size()
       << " failures=" << r.failures << " min_slack=" << (r.min_slack ? to_string(*r.min_slack) : "none")
       << " equality=[";
    for (std::size_t i = 0; i < r.equality_cases.size(); ++i)
        os << (i ? "," : "") << r.equality_cases[i];
    os << "]";
    return os.str();
}

std::string render(const SuiteResult& r, const std::string& format)
{
    if (format == "csv") {
        std::string out = csv_header() + "\n";
        for (const auto& rec : r.records)
            out += to_csv(rec) + "\n";
        return out;
    }
    if (format != "json")
        throw PreconditionError("unknown format: " + format);
    Json j;
    j["suite"] = r.suite;
    j["instances"] = r.instances;
    j["failures"] = r.failures;
    j["min_slack"] = r.min_slack ? Json(to_string(*r.min_slack)) : Json(nullptr);
    j["equality_cases"] = r.equality_cases;
    Json recs = Json::array();
    for (const auto& rec : r.records)
        recs.push_back(to_json(rec));
    j["records"] = recs;
    return j.dump(1) + "\n";
}

} // namespace abx
