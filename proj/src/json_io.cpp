#include "skewlab/json_io.hpp"

#include "skewlab/error.hpp"

namespace skewlab {

Json integer_to_json(const Integer& value) {
    if (fits_int64(value)) return value.convert_to<std::int64_t>();
    return value.str();
}

namespace {

template <class Tag>
Json terms_to_json(const SparseVector<Tag>& f, const char* key) {
    Json out = Json::array();
    for (const auto& [k, c] : f.terms()) {
        Json term;
        term[key] = k.vec();
        term["coeff"] = integer_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

Json partitions_to_json(const std::vector<Partition>& ps) {
    Json out = Json::array();
    for (const Partition& p : ps) out.push_back(p.vec());
    return out;
}

} // namespace

Json to_json(const SchurVector& f) { return terms_to_json(f, "partition"); }
Json to_json(const HPolynomial& f) { return terms_to_json(f, "subscripts"); }
Json to_json(const EPolynomial& f) { return terms_to_json(f, "subscripts"); }
Json to_json(const MonomialVector& f) { return terms_to_json(f, "partition"); }
Json to_json(const CharacterVector& f) { return terms_to_json(f, "class"); }

SchurVector schur_vector_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::ParseError, "expected an array of terms");
    SchurVector out;
    try {
        for (const auto& term : j) {
            const auto parts = term.at("partition").get<std::vector<int>>();
            const Json& c = term.at("coeff");
            out.add(Partition(parts), c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>()));
        }
    } catch (const Json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
    return out;
}

Json invariants_to_json(const SkewShape& d) {
    const OverlapProfile p = overlaps(d);
    Json out;
    out["rank"] = d.empty() ? 0 : frobenius_rank(d);
    out["rho"] = partitions_to_json(p.row_parts);
    out["gamma"] = partitions_to_json(p.col_parts);
    out["rect"] = p.rect_counts;
    return out;
}

Json to_json(const SporadicResult& r) {
    Json out;
    out["pair_id"] = r.pair_id;
    out["equal"] = r.equal;
    out["a"] = r.a.compact();
    out["b"] = r.b.compact();
    out["rotations_equal"] = r.rotations_equal;
    out["conjugates_equal"] = r.conjugates_equal;
    return out;
}

Json to_json(const ClassificationReport& report) {
    Json out;
    out["n"] = report.n;
    out["total"] = report.total_diagrams;
    Json classes = Json::array();
    for (const EquivalenceClass& cls : report.classes) {
        Json c;
        Json members = Json::array();
        for (const SkewShape& m : cls.members) members.push_back(m.compact());
        c["members"] = std::move(members);
        c["size"] = cls.size();
        c["rank"] = cls.rank;
        c["power_of_two"] = cls.power_of_two();
        c["closed_under_rotation"] = cls.closed_under_rotation;
        c["closed_under_transpose"] = cls.closed_under_transpose;
        classes.push_back(std::move(c));
    }
    out["classes"] = std::move(classes);
    Json histogram = Json::object();
    for (const auto& [size, count] : report.histogram) histogram[std::to_string(size)] = count;
    out["histogram"] = std::move(histogram);
    out["power_of_two_violations"] = report.power_of_two_violations;
    Json sporadics = Json::array();
    for (const SporadicResult& r : report.sporadics) sporadics.push_back(to_json(r));
    out["sporadics"] = std::move(sporadics);
    return out;
}

} // namespace skewlab
