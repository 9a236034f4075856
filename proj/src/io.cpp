#include "umbral/io.hpp"

#include <stdexcept>

namespace umbral::io {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw std::invalid_argument(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

std::vector<Rational> rational_list(const Json& j, const char* key) {
    const Json& arr = field(j, key);
    if (!arr.is_array()) throw std::invalid_argument(std::string("field '") + key + "' must be an array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto& x : arr) out.push_back(rational_from_json(x));
    return out;
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Json to_json(std::span<const Rational> values) {
    Json arr = Json::array();
    for (const auto& q : values) arr.push_back(q.str());
    return arr;
}

Json to_json(const TruncatedSeries& f) {
    Json j = Json::object();
    j["order"] = f.order();
    j["coeffs"] = to_json(f.coeffs());
    return j;
}

TruncatedSeries series_from_json(const Json& j) {
    const std::size_t order = size_field(j, "order");
    auto coeffs = rational_list(j, "coeffs");
    if (coeffs.size() != order + 1) {
        throw std::invalid_argument("series: expected " + std::to_string(order + 1) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
    }
    return TruncatedSeries(std::move(coeffs));
}

Json to_json(const MomentSequence& a) {
    Json j = Json::object();
    j["order"] = a.order();
    j["values"] = to_json(a.values());
    return j;
}

MomentSequence moments_from_json(const Json& j, std::optional<std::size_t> order) {
    if (j.is_string()) {
        if (!order) throw std::invalid_argument("named sequence '" + j.get<std::string>() + "' needs an order");
        return named_sequence(j.get<std::string>(), *order);
    }
    const std::size_t declared = size_field(j, "order");
    auto values = rational_list(j, "values");
    if (values.size() != declared) {
        throw std::invalid_argument("sequence: expected " + std::to_string(declared) + " values, got " +
                                    std::to_string(values.size()));
    }
    if (order && *order != declared) {
        throw std::invalid_argument("sequence order " + std::to_string(declared) + " does not match requested order " +
                                    std::to_string(*order));
    }
    return MomentSequence(std::move(values));
}

Json to_json(const SetPartition& p) {
    Json j = Json::object();
    j["n"] = p.n();
    j["blocks"] = p.blocks();
    return j;
}

SetPartition partition_from_json(const Json& j) {
    const auto n = size_field(j, "n");
    const Json& blocks = field(j, "blocks");
    if (!blocks.is_array()) throw std::invalid_argument("field 'blocks' must be an array");
    std::vector<std::vector<unsigned>> out;
    for (const auto& b : blocks) {
        if (!b.is_array()) throw std::invalid_argument("each block must be an array");
        std::vector<unsigned> block;
        for (const auto& x : b) {
            if (!x.is_number_integer() || x.get<long long>() < 1) throw std::invalid_argument("block entries must be positive integers");
            block.push_back(x.get<unsigned>());
        }
        out.push_back(std::move(block));
    }
    return SetPartition(static_cast<unsigned>(n), out);
}

Json to_json(const CumulantMatrix& m) {
    Json j = Json::object();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (std::size_t n = 1; n <= m.rows(); ++n) {
        Json row = Json::array();
        for (std::size_t k = 1; k <= m.cols(); ++k) row.push_back(m.at(n, k).str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const VerificationReport& r) {
    Json j = Json::object();
    j["theorem"] = r.theorem;
    j["n"] = r.n;
    j["pass"] = r.pass;
    j["checked"] = r.checked;
    if (!r.pass) j["detail"] = r.detail;
    return j;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace umbral::io
