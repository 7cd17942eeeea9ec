#include "polytc/json_io.hpp"

#include <fstream>
#include <ostream>

namespace polytc {

namespace {

using nlohmann::json;

json face_to_json(Face f) { return json(f.vertices()); }

json faces_to_json(std::span<const Face> faces) {
    json out = json::array();
    for (Face f : faces) out.push_back(face_to_json(f));
    return out;
}

Face face_from_json(const json& j) {
    std::vector<int> vs = j.get<std::vector<int>>();
    return Face::from_vertices(vs);
}

std::vector<Face> faces_from_json(const json& j) {
    std::vector<Face> out;
    for (const json& e : j) out.push_back(face_from_json(e));
    return out;
}

[[noreturn]] void rethrow_as_domain(const char* what, const std::exception& e) {
    throw std::domain_error(std::string(what) + ": " + e.what());
}

}  // namespace

json complex_to_json(const SimplicialComplex& k) {
    json out;
    out["n"] = k.vertex_count();
    out["maximal_faces"] = faces_to_json(k.maximal_faces());
    return out;
}

SimplicialComplex complex_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        std::vector<Face> maximal = faces_from_json(j.at("maximal_faces"));
        if (maximal.size() == 1 && maximal.front().empty()) maximal.clear();
        return SimplicialComplex::from_maximal_faces(n, std::move(maximal));
    } catch (const json::exception& e) {
        rethrow_as_domain("malformed complex document", e);
    }
}

json spec_to_json(const SphereProductSpec& spec) {
    json out = complex_to_json(spec.complex());
    out["dims"] = spec.dims();
    if (!spec.name().empty()) out["name"] = spec.name();
    return out;
}

Carrier spec_from_json(const json& j) {
    try {
        SimplicialComplex k = complex_from_json(j);
        std::vector<int> dims = j.at("dims").get<std::vector<int>>();
        std::string name;
        if (j.contains("name")) name = j.at("name").get<std::string>();
        return std::make_shared<const SphereProductSpec>(std::move(k), std::move(dims),
                                                         std::move(name));
    } catch (const json::exception& e) {
        rethrow_as_domain("malformed spec document", e);
    }
}

json witness_to_json(const NormWitness& w) {
    json out;
    out["value"] = w.value;
    out["witness"] = faces_to_json(w.tuple);
    return out;
}

json tensor_to_json(const TensorElement& t) {
    json terms = json::array();
    for (const auto& [faces, coef] : t.terms()) {
        json term;
        term["faces"] = faces_to_json(faces);
        term["coef"] = rational_to_string(coef);
        terms.push_back(std::move(term));
    }
    json out;
    out["terms"] = std::move(terms);
    return out;
}

json certificate_to_json(const Certificate& cert) {
    json out;
    out["tuple"] = faces_to_json(cert.tuple);
    out["j_prime"] = face_to_json(cert.j_prime);
    out["count"] = cert.factors.size();
    json factors = json::array();
    for (const TensorElement& f : cert.factors) factors.push_back(tensor_to_json(f));
    out["factors"] = std::move(factors);
    out["product"] = tensor_to_json(cert.product);
    json anchor;
    anchor["faces"] = faces_to_json(cert.distinguished.first);
    anchor["coef"] = rational_to_string(cert.distinguished.second);
    out["distinguished"] = std::move(anchor);
    return out;
}

json configuration_to_json(const Configuration& config) {
    json columns = json::array();
    for (int j = 1; j <= config.stages(); ++j) {
        json column = json::array();
        for (int i = 1; i <= config.rows(); ++i) {
            const auto& c = config.point(i, j).coords();
            json point = json::array();
            for (Eigen::Index k = 0; k < c.size(); ++k) point.push_back(c[k]);
            column.push_back(std::move(point));
        }
        columns.push_back(std::move(column));
    }
    json out;
    out["columns"] = std::move(columns);
    return out;
}

Configuration configuration_from_json(const Carrier& carrier, const json& j, double tol) {
    if (!carrier) throw std::domain_error("configuration requires a spec");
    try {
        const json& columns = j.at("columns");
        if (!columns.is_array() || columns.empty())
            throw std::domain_error("configuration requires a nonempty column list");
        const int n = carrier->complex().vertex_count();
        std::vector<std::vector<SpherePoint>> parsed;
        for (const json& column : columns) {
            if (static_cast<int>(column.size()) != n)
                throw std::domain_error("configuration column size differs from the vertex count");
            std::vector<SpherePoint> points;
            for (int i = 1; i <= n; ++i) {
                const std::vector<double> c =
                    column.at(i - 1).get<std::vector<double>>();
                if (static_cast<int>(c.size()) != carrier->dim_of(i) + 1)
                    throw std::domain_error("coordinate count differs from the sphere dimension");
                Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
                for (std::size_t k = 0; k < c.size(); ++k)
                    v[static_cast<Eigen::Index>(k)] = c[k];
                points.emplace_back(v);
            }
            parsed.push_back(std::move(points));
        }
        return Configuration(carrier, std::move(parsed), tol);
    } catch (const json::exception& e) {
        rethrow_as_domain("malformed configuration document", e);
    }
}

json stratum_to_json(const Stratum& st) {
    json rows = json::array();
    for (const OrderedPartition& p : st.partitions.rows) rows.push_back(json(p.parts));
    json out;
    out["partitions"] = std::move(rows);
    out["k_set"] = face_to_json(st.k_set);
    out["beta"] = st.beta;
    json eps = json::object();
    for (const auto& [v, sign] : st.epsilon) eps[std::to_string(v)] = sign;
    out["epsilon"] = std::move(eps);
    out["norm"] = st.norm();
    return out;
}

json report_to_json(const VerificationReport& rep) {
    json out;
    out["spec_id"] = rep.spec_id;
    out["s"] = rep.s;
    out["trials"] = rep.trials;
    out["seed"] = rep.seed;
    out["tol"] = rep.tol;
    out["grid"] = rep.grid;
    out["checks"] = rep.checks;
    out["max_norm_seen"] = rep.max_norm_seen;
    out["continuity_max_ratio"] = rep.continuity_max_ratio;
    out["note"] = rep.note;
    out["passed"] = rep.passed();
    json failures = json::array();
    for (const VerificationFailure& f : rep.failures) {
        json e;
        e["property"] = f.property;
        e["configuration"] = f.configuration;
        e["detail"] = f.detail;
        failures.push_back(std::move(e));
    }
    out["failures"] = std::move(failures);
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        rethrow_as_domain(("cannot parse " + path).c_str(), e);
    }
}

void write_trace_csv(std::ostream& os, const PathPlan& plan, int grid) {
    if (grid < 1) throw std::domain_error("trace grid must be positive");
    const int s = plan.stages();
    const std::vector<SpherePoint> first = plan.eval_column(1, 0.0);
    const int n = static_cast<int>(first.size());
    os << "t";
    for (int j = 1; j <= s; ++j)
        for (int i = 1; i <= n; ++i)
            for (Eigen::Index k = 0; k < first[static_cast<std::size_t>(i - 1)].coords().size();
                 ++k)
                os << ",c" << j << "_r" << i << "_" << k;
    os << "\n";
    os.precision(17);
    for (int g = 0; g <= grid; ++g) {
        const double t = static_cast<double>(g) / grid;
        os << t;
        for (int j = 1; j <= s; ++j) {
            const std::vector<SpherePoint> col = plan.eval_column(j, t);
            for (const SpherePoint& p : col)
                for (Eigen::Index k = 0; k < p.coords().size(); ++k) os << "," << p.coords()[k];
        }
        os << "\n";
    }
}

}  // namespace polytc
