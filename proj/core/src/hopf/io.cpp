#include "pw/hopf/io.hpp"

#include <fstream>
#include <sstream>

namespace pw::hopf {

namespace {

using boost::multiprecision::cpp_int;

cpp_int int_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    try {
        return cpp_int(s);
    } catch (const std::exception&) {
        throw ParseError("bad integer literal '" + s + "'");
    }
}

const json& field_at(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t as_index(const json& j, const char* what) {
    if (!j.is_number_unsigned()) throw ParseError(std::string("expected a non-negative ") + what);
    return j.get<std::size_t>();
}

}  // namespace

json scalar_to_json(const Scalar& s) {
    if (denominator(s) == 1) {
        const cpp_int& n = numerator(s);
        if (n >= std::numeric_limits<std::int64_t>::min() &&
            n <= std::numeric_limits<std::int64_t>::max())
            return json(static_cast<std::int64_t>(n));
        return json(n.str());
    }
    return json(numerator(s).str() + "/" + denominator(s).str());
}

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Scalar(int_from_string(s));
        cpp_int num = int_from_string(s.substr(0, slash));
        cpp_int den = int_from_string(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Scalar(num, den);
    }
    throw ParseError("coefficient must be an integer or an \"a/b\" string");
}

json hopf_to_json(const HopfAlgebra& h) {
    json j;
    j["name"] = h.name;
    if (h.field.is_prime())
        j["field"] = json{{"type", "fp"}, {"p", h.field.p()}};
    else
        j["field"] = json{{"type", "q"}};
    j["dim"] = h.dim;
    auto tensor = [](const Tensor3& t) {
        json arr = json::array();
        for (const auto& e : t.sorted_entries())
            arr.push_back(json::array({e.i, e.j, e.k, scalar_to_json(e.c)}));
        return arr;
    };
    j["mult"] = tensor(h.mult);
    json unit = json::array(), counit = json::array();
    for (const auto& c : h.unit) unit.push_back(scalar_to_json(c));
    for (const auto& c : h.counit) counit.push_back(scalar_to_json(c));
    j["unit"] = unit;
    j["comult"] = tensor(h.comult);
    j["counit"] = counit;
    json anti = json::array();
    // entries [i, k, c]: S(e_i) = sum_k c e_k; internally columns are images
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t k = 0; k < h.dim; ++k)
            if (h.antipode.at(k, i) != 0)
                anti.push_back(json::array({i, k, scalar_to_json(h.antipode.at(k, i))}));
    j["antipode"] = anti;
    return j;
}

HopfAlgebra hopf_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    const json& nj = field_at(j, "name");
    if (!nj.is_string()) throw ParseError("'name' must be a string");
    std::string name = nj.get<std::string>();
    const json& fj = field_at(j, "field");
    std::string type = field_at(fj, "type").get<std::string>();
    Field field = Field::rationals();
    if (type == "fp") {
        const json& pj = field_at(fj, "p");
        if (!pj.is_number_unsigned()) throw ParseError("'field.p' must be a positive integer");
        try {
            field = Field::fp(pj.get<std::uint64_t>());
        } catch (const exalg::FieldError& e) {
            throw ParseError(e.what());
        }
    } else if (type != "q") {
        throw ParseError("'field.type' must be \"fp\" or \"q\"");
    }
    std::size_t dim = as_index(field_at(j, "dim"), "'dim'");
    if (dim == 0) throw ParseError("'dim' must be positive");

    auto tensor = [&](const char* key) {
        Tensor3 t(field, dim, dim, dim);
        const json& arr = field_at(j, key);
        if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
        for (const json& e : arr) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError(std::string("'") + key + "' entries must be [i,j,k,c]");
            std::size_t i = as_index(e[0], "index"), jj = as_index(e[1], "index"),
                        k = as_index(e[2], "index");
            if (i >= dim || jj >= dim || k >= dim)
                throw ParseError(std::string("index out of range in '") + key + "'");
            t.add(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(jj),
                  static_cast<std::uint32_t>(k), scalar_from_json(e[3]));
        }
        return t;
    };
    auto vec = [&](const char* key) {
        const json& arr = field_at(j, key);
        if (!arr.is_array() || arr.size() != dim)
            throw ParseError(std::string("'") + key + "' must be an array of length dim");
        std::vector<Scalar> v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = field.canon(scalar_from_json(arr[i]));
        return v;
    };

    Matrix antipode(field, dim, dim);
    const json& aj = field_at(j, "antipode");
    if (!aj.is_array()) throw ParseError("'antipode' must be an array");
    for (const json& e : aj) {
        if (!e.is_array() || e.size() != 3) throw ParseError("'antipode' entries must be [i,j,c]");
        std::size_t i = as_index(e[0], "index"), k = as_index(e[1], "index");
        if (i >= dim || k >= dim) throw ParseError("index out of range in 'antipode'");
        antipode.set(k, i, scalar_from_json(e[2]));
    }

    return HopfAlgebra{name, field, dim, tensor("mult"), vec("unit"),
                       tensor("comult"), vec("counit"), antipode};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("parse error in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

HopfAlgebra load_hopf(const std::string& path) { return hopf_from_json(load_json_file(path)); }

void save_hopf(const HopfAlgebra& h, const std::string& path) {
    save_json_file(hopf_to_json(h), path);
}

json heap_to_json(const heap::FiniteHeap& h) {
    json j;
    j["carrier"] = h.carrier();
    json law = json::array();
    const std::size_t n = h.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                law.push_back(json::array({a, b, c, h.op(a, b, c)}));
    j["law"] = law;
    return j;
}

heap::FiniteHeap heap_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("heap file must be a JSON object");
    const json& cj = field_at(j, "carrier");
    if (!cj.is_array()) throw ParseError("'carrier' must be an array");
    std::vector<std::string> carrier;
    for (const json& e : cj) {
        if (e.is_string())
            carrier.push_back(e.get<std::string>());
        else
            carrier.push_back(e.dump());
    }
    const std::size_t n = carrier.size();
    std::vector<std::size_t> table(n * n * n, 0);
    std::vector<bool> filled(n * n * n, false);
    const json& lj = field_at(j, "law");
    if (!lj.is_array()) throw ParseError("'law' must be an array");
    for (const json& e : lj) {
        if (!e.is_array() || e.size() != 4) throw ParseError("'law' entries must be [i,j,k,result]");
        std::size_t a = as_index(e[0], "index"), b = as_index(e[1], "index"),
                    c = as_index(e[2], "index"), r = as_index(e[3], "result");
        if (a >= n || b >= n || c >= n || r >= n) throw ParseError("heap law index out of carrier");
        table[(a * n + b) * n + c] = r;
        filled[(a * n + b) * n + c] = true;
    }
    for (bool f : filled)
        if (!f) throw ParseError("heap law is not total");
    return heap::make_raw_heap(std::move(carrier), std::move(table));
}

}  // namespace pw::hopf
