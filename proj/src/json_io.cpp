#include "tvb/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <limits>

namespace tvb {

namespace {

Json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(x));
    return Json(x.str());
}

Json rat_to_json(const Rat& q) {
    if (is_integer(q)) return int_to_json(rat_num(q));
    return Json(rat_to_string(q));
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw JsonFormatError("expected an integer", where);
}

Rat rat_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw JsonFormatError("expected an integer or \"p/q\" string", where);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw JsonFormatError(std::string("missing field '") + key + "'", where);
    return j.at(key);
}

void expect_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw JsonFormatError("expected an array", where);
}

}  // namespace

Json to_json(const LatticeVector& v) {
    Json a = Json::array();
    for (const Int& x : v.c) a.push_back(int_to_json(x));
    return a;
}

Json to_json(const RationalVector& v) {
    Json a = Json::array();
    for (const Rat& x : v.c) a.push_back(rat_to_json(x));
    return a;
}

Json to_json(const Polytope& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back(to_json(v));
    return Json{{"vertices", verts}};
}

Json to_json(const Cone& c) {
    Json rays = Json::array();
    for (const auto& r : c.rays()) rays.push_back(to_json(r));
    Json j{{"rays", rays}};
    if (!c.lineality().empty()) {
        Json lin = Json::array();
        for (const auto& l : c.lineality()) lin.push_back(to_json(l));
        j["lineality"] = lin;
    }
    return j;
}

Json to_json(const Fan& f) {
    Json rays = Json::array();
    for (const auto& r : f.rays()) rays.push_back(to_json(r));
    Json cones = Json::array();
    for (int i = 0; i < f.num_max_cones(); ++i) cones.push_back(f.max_cone(i));
    return Json{{"rank", f.rank()}, {"rays", rays}, {"max_cones", cones}};
}

Json to_json(const PLFunction& h) {
    Json slopes = Json::object();
    for (int i = 0; i < h.fan()->num_max_cones(); ++i)
        slopes[std::to_string(i)] = to_json(h.slope(i));
    return Json{{"fan", to_json(*h.fan())}, {"slopes", slopes}};
}

Json to_json(const MultiSupportFunction& m) {
    Json branches = Json::object();
    for (int i = 0; i < m.fan()->num_max_cones(); ++i) {
        Json list = Json::array();
        for (const auto& u : m.branches_on(i)) list.push_back(to_json(u));
        branches[std::to_string(i)] = list;
    }
    return Json{{"fan", to_json(*m.fan())}, {"branches", branches}};
}

Json to_json(const ConvexChain& a) {
    Json terms = Json::array();
    for (const auto& t : a.terms())
        terms.push_back(Json{{"coeff", int_to_json(t.coeff)}, {"polytope", to_json(t.polytope)}});
    return Json{{"rank", a.rank()}, {"terms", terms}};
}

Json to_json(const ConeChain& a) {
    Json terms = Json::array();
    for (const auto& t : a.terms())
        terms.push_back(Json{{"coeff", int_to_json(t.coeff)},
                             {"apex", to_json(t.apex)},
                             {"cone", to_json(t.cone)}});
    return Json{{"rank", a.rank()}, {"terms", terms}};
}

Json to_json(const KlyachkoBundle& b) {
    Json filts = Json::object();
    for (size_t r = 0; r < b.fan()->rays().size(); ++r) {
        Json steps = Json::array();
        for (const auto& s : b.filtration(static_cast<int>(r)).steps()) {
            Json basis = Json::array();
            for (const auto& row : s.space.basis()) {
                Json jr = Json::array();
                for (const Rat& x : row) jr.push_back(rat_to_json(x));
                basis.push_back(jr);
            }
            steps.push_back(Json{{"threshold", int_to_json(s.threshold)}, {"basis", basis}});
        }
        filts[std::to_string(r)] = steps;
    }
    return Json{{"rank", b.rank()}, {"fan", to_json(*b.fan())}, {"filtrations", filts}};
}

Json to_json(const EhrhartPolynomial& p) {
    Json coeffs = Json::array();
    for (const Rat& c : p.coeffs) coeffs.push_back(rat_to_string(c));
    return Json{{"coeffs", coeffs}};
}

LatticeVector lattice_vector_from_json(const Json& j, const std::string& where) {
    expect_array(j, where);
    std::vector<Int> c;
    for (size_t i = 0; i < j.size(); ++i)
        c.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return LatticeVector(std::move(c));
}

RationalVector rational_vector_from_json(const Json& j, const std::string& where) {
    expect_array(j, where);
    std::vector<Rat> c;
    for (size_t i = 0; i < j.size(); ++i)
        c.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return RationalVector(std::move(c));
}

Polytope polytope_from_json(const Json& j, const std::string& where) {
    const Json& verts = member(j, "vertices", where);
    expect_array(verts, where + ".vertices");
    std::vector<RationalVector> pts;
    for (size_t i = 0; i < verts.size(); ++i)
        pts.push_back(rational_vector_from_json(verts[i], where + ".vertices[" + std::to_string(i) + "]"));
    if (pts.empty()) {
        int rank = j.contains("rank")
                       ? static_cast<int>(int_from_json(j.at("rank"), where + ".rank"))
                       : 0;
        return Polytope::empty(rank);
    }
    const int rank = pts[0].rank();
    return Polytope::from_points(rank, std::move(pts));
}

Cone cone_from_json(const Json& j, const std::string& where) {
    const Json& rays = member(j, "rays", where);
    expect_array(rays, where + ".rays");
    std::vector<LatticeVector> rs;
    for (size_t i = 0; i < rays.size(); ++i)
        rs.push_back(lattice_vector_from_json(rays[i], where + ".rays[" + std::to_string(i) + "]"));
    if (rs.empty()) {
        int rank = static_cast<int>(int_from_json(member(j, "rank", where), where + ".rank"));
        return Cone::from_rays(rank, {});
    }
    return Cone::from_rays(rs[0].rank(), rs);
}

FanPtr fan_from_json(const Json& j, const std::string& where) {
    int rank = static_cast<int>(int_from_json(member(j, "rank", where), where + ".rank"));
    const Json& rays = member(j, "rays", where);
    expect_array(rays, where + ".rays");
    std::vector<LatticeVector> rs;
    for (size_t i = 0; i < rays.size(); ++i)
        rs.push_back(lattice_vector_from_json(rays[i], where + ".rays[" + std::to_string(i) + "]"));
    const Json& cones = member(j, "max_cones", where);
    expect_array(cones, where + ".max_cones");
    std::vector<std::vector<int>> mc;
    for (size_t i = 0; i < cones.size(); ++i) {
        const std::string loc = where + ".max_cones[" + std::to_string(i) + "]";
        expect_array(cones[i], loc);
        std::vector<int> idx;
        for (const auto& e : cones[i]) idx.push_back(static_cast<int>(int_from_json(e, loc)));
        mc.push_back(std::move(idx));
    }
    try {
        return Fan::make(rank, std::move(rs), std::move(mc));
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what(), where);
    }
}

PLFunction plfunction_from_json(const Json& j, const std::string& where) {
    FanPtr fan = fan_from_json(member(j, "fan", where), where + ".fan");
    const Json& slopes = member(j, "slopes", where);
    std::vector<LatticeVector> s(fan->num_max_cones(), zero_lattice(fan->rank()));
    for (int i = 0; i < fan->num_max_cones(); ++i) {
        std::string key = std::to_string(i);
        if (!slopes.contains(key))
            throw JsonFormatError("missing slope for maximal cone " + key, where + ".slopes");
        s[i] = lattice_vector_from_json(slopes.at(key), where + ".slopes." + key);
    }
    try {
        return PLFunction(fan, std::move(s));
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what(), where);
    }
}

ConvexChain chain_from_json(const Json& j, const std::string& where) {
    const Json& terms = member(j, "terms", where);
    expect_array(terms, where + ".terms");
    int rank = -1;
    if (j.contains("rank")) rank = static_cast<int>(int_from_json(j.at("rank"), where + ".rank"));
    std::vector<ConvexChain::Term> ts;
    for (size_t i = 0; i < terms.size(); ++i) {
        const std::string loc = where + ".terms[" + std::to_string(i) + "]";
        Int coeff = int_from_json(member(terms[i], "coeff", loc), loc + ".coeff");
        Polytope p = polytope_from_json(member(terms[i], "polytope", loc), loc + ".polytope");
        if (rank < 0) rank = p.rank();
        ts.push_back(ConvexChain::Term{std::move(coeff), std::move(p)});
    }
    if (rank < 0) throw JsonFormatError("empty chain needs an explicit rank", where);
    try {
        return ConvexChain(rank, std::move(ts));
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what(), where);
    }
}

KlyachkoBundle bundle_from_json(const Json& j, const std::string& where) {
    int rank = static_cast<int>(int_from_json(member(j, "rank", where), where + ".rank"));
    FanPtr fan = fan_from_json(member(j, "fan", where), where + ".fan");
    const Json& filts = member(j, "filtrations", where);
    std::vector<Filtration> fs;
    for (size_t r = 0; r < fan->rays().size(); ++r) {
        std::string key = std::to_string(r);
        if (!filts.contains(key))
            throw JsonFormatError("missing filtration for ray " + key, where + ".filtrations");
        const Json& steps = filts.at(key);
        const std::string loc = where + ".filtrations." + key;
        expect_array(steps, loc);
        std::vector<Filtration::Step> ss;
        for (size_t k = 0; k < steps.size(); ++k) {
            const std::string sloc = loc + "[" + std::to_string(k) + "]";
            Int thr = int_from_json(member(steps[k], "threshold", sloc), sloc + ".threshold");
            const Json& basis = member(steps[k], "basis", sloc);
            expect_array(basis, sloc + ".basis");
            QMat rows;
            for (size_t t = 0; t < basis.size(); ++t)
                rows.push_back(
                    rational_vector_from_json(basis[t], sloc + ".basis[" + std::to_string(t) + "]").c);
            ss.push_back(Filtration::Step{std::move(thr), Subspace::from_rows(rank, std::move(rows))});
        }
        try {
            fs.push_back(Filtration(rank, std::move(ss)));
        } catch (const std::invalid_argument& e) {
            throw JsonFormatError(e.what(), loc);
        }
    }
    try {
        return KlyachkoBundle(fan, rank, std::move(fs));
    } catch (const std::invalid_argument& e) {
        throw JsonFormatError(e.what(), where);
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JsonFormatError("cannot open file", path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw JsonFormatError(e.what(), path);
    }
}

}  // namespace tvb
