#include "hce/json_io.hpp"

#include <limits>
#include <sstream>

namespace hce {

Json ring_to_json(const RingSpec& spec) {
    Json j;
    switch (spec.tag) {
        case RingTag::PLocal: j["tag"] = "PLocal"; j["p"] = spec.p; break;
        case RingTag::ChainRing: j["tag"] = "ChainRing"; j["p"] = spec.p; j["N"] = spec.N; break;
        case RingTag::TruncPoly:
            j["tag"] = "TruncPoly"; j["p"] = spec.p; j["N"] = spec.N; j["M"] = spec.M; break;
    }
    return j;
}

RingSpec ring_from_json(const Json& j) {
    std::string tag = j.at("tag");
    long p = j.at("p");
    if (tag == "PLocal") return RingSpec::plocal(p);
    if (tag == "ChainRing") return RingSpec::chain(p, j.at("N"));
    if (tag == "TruncPoly") return RingSpec::trunc_poly(p, j.at("N"), j.at("M"));
    throw std::invalid_argument("unknown ring tag: " + tag);
}

Json scalar_to_json(const Ring& ring, const Scalar& s) {
    switch (ring.spec().tag) {
        case RingTag::PLocal: {
            BigRat x = std::get<PRat>(s.v).to_big();
            if (boost::multiprecision::denominator(x) == 1 &&
                boost::multiprecision::numerator(x) >= std::numeric_limits<std::int64_t>::min() &&
                boost::multiprecision::numerator(x) <= std::numeric_limits<std::int64_t>::max())
                return Json(boost::multiprecision::numerator(x).convert_to<std::int64_t>());
            return Json(ring.str(s));
        }
        case RingTag::ChainRing: return Json(std::get<std::int64_t>(s.v));
        case RingTag::TruncPoly: return Json(std::get<std::vector<std::int64_t>>(s.v));
    }
    return Json();
}

Scalar scalar_from_json(const Ring& ring, const Json& j) {
    switch (ring.spec().tag) {
        case RingTag::PLocal: {
            if (j.is_number_integer()) return ring.from_int(j.get<std::int64_t>());
            std::string text = j.get<std::string>();
            auto slash = text.find('/');
            Scalar s;
            if (slash == std::string::npos) s.v = PRat(BigRat(BigInt(text)));
            else s.v = PRat(BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1))));
            return ring.normalize(s);
        }
        case RingTag::ChainRing: {
            Scalar s;
            s.v = j.get<std::int64_t>();
            return ring.normalize(s);
        }
        case RingTag::TruncPoly: {
            Scalar s;
            s.v = j.get<std::vector<std::int64_t>>();
            return ring.normalize(s);
        }
    }
    throw std::logic_error("unreachable");
}

Json module_to_json(const FreeWGModule& m) {
    Json j;
    j["ring"] = ring_to_json(m.spec());
    j["basis"] = Json::array();
    for (const auto& b : m.basis())
        j["basis"].push_back({{"name", b.name}, {"degree", b.degree}, {"weight", b.weight}});
    return j;
}

FreeWGModule module_from_json(const Json& j) {
    RingSpec spec = ring_from_json(j.at("ring"));
    std::vector<BasisElt> basis;
    for (const auto& b : j.at("basis"))
        basis.push_back({b.at("name"), b.at("degree"), b.at("weight")});
    return FreeWGModule(spec, std::move(basis));
}

Json lie_to_json(const Ring& ring, const GradedLieAlgebra& g) {
    Json j = module_to_json(g.module);
    j["bracket"] = Json::array();
    for (const auto& [key, v] : g.bracket) {
        Json entry;
        entry["a"] = g.module.elt(key.first).name;
        entry["b"] = g.module.elt(key.second).name;
        entry["out"] = Json::array();
        for (const auto& [e, c] : v)
            entry["out"].push_back({{"basis", g.module.elt(e).name}, {"coeff", scalar_to_json(ring, c)}});
        j["bracket"].push_back(std::move(entry));
    }
    return j;
}

GradedLieAlgebra lie_from_json(const Ring& ring, const Json& j) {
    GradedLieAlgebra g;
    g.module = module_from_json(j);
    if (j.contains("bracket"))
        for (const auto& entry : j.at("bracket")) {
            int a = g.module.index_of(entry.at("a"));
            int b = g.module.index_of(entry.at("b"));
            Vec v;
            for (const auto& term : entry.at("out"))
                v[g.module.index_of(term.at("basis"))] = scalar_from_json(ring, term.at("coeff"));
            g.bracket[{a, b}] = std::move(v);
        }
    return g;
}

Json hecke_to_json(const Ring& ring, const HeckeLieAlgebra& g) {
    Json j = lie_to_json(ring, g.lie);
    Json model;
    model["f_coeffs"] = Json::array();
    for (const auto& c : g.model.f_coeffs) model["f_coeffs"].push_back(scalar_to_json(ring, c));
    j["model"] = std::move(model);
    j["action"] = Json::array();
    for (const auto& [gen, act] : g.action) {
        Json entry;
        entry["gen"] = g.lie.module.elt(gen).name;
        entry["targets"] = Json::array();
        for (int t : act.targets) entry["targets"].push_back(g.lie.module.elt(t).name);
        entry["matrix"] = Json::array();
        for (int r = 0; r < act.matrix.rows; ++r) {
            Json row = Json::array();
            for (int c = 0; c < act.matrix.cols; ++c)
                row.push_back(scalar_to_json(ring, act.matrix.at(r, c)));
            entry["matrix"].push_back(std::move(row));
        }
        j["action"].push_back(std::move(entry));
    }
    return j;
}

HeckeLieAlgebra hecke_from_json(const Ring& ring, const Json& j) {
    HeckeLieAlgebra g;
    g.lie = lie_from_json(ring, j);
    std::vector<Scalar> f;
    for (const auto& c : j.at("model").at("f_coeffs")) f.push_back(scalar_from_json(ring, c));
    g.model = f.empty() ? height1_model(ring) : model_from_euler_poly(ring, f);
    if (j.contains("action"))
        for (const auto& entry : j.at("action")) {
            HeckeLieAlgebra::Action act;
            for (const auto& t : entry.at("targets"))
                act.targets.push_back(g.lie.module.index_of(t));
            const auto& rows = entry.at("matrix");
            act.matrix = Mat(static_cast<int>(rows.size()), g.model.rank);
            for (auto& x : act.matrix.a) x = ring.zero();
            for (int r = 0; r < act.matrix.rows; ++r)
                for (int c = 0; c < act.matrix.cols; ++c)
                    act.matrix.at(r, c) = scalar_from_json(ring, rows[r][c]);
            g.action[g.lie.module.index_of(entry.at("gen"))] = std::move(act);
        }
    return g;
}

Json summary_to_json(const HomologySummary& h) {
    Json j;
    j["entries"] = Json::array();
    for (const auto& [key, m] : h.entries) {
        auto [n, i, w] = key;
        j["entries"].push_back(
            {{"n", n}, {"i", i}, {"w", w}, {"free", m.free_rank}, {"torsion", m.torsion}});
    }
    return j;
}

Json page_to_json(const Page& p) {
    Json j;
    j["cohomological"] = p.cohomological;
    j["page"] = p.number;
    j["entries"] = Json::array();
    for (const auto& [key, m] : p.entries) {
        auto [s, t, w] = key;
        j["entries"].push_back(
            {{"s", s}, {"t", t}, {"w", w}, {"free", m.free_rank}, {"torsion", m.torsion}});
    }
    return j;
}

std::string page_to_tsv(const Page& p) {
    std::ostringstream os;
    os << "s\tt\tw\tfree\ttorsion\n";
    for (const auto& [key, m] : p.entries) {
        auto [s, t, w] = key;
        os << s << "\t" << t << "\t" << w << "\t" << m.free_rank << "\t";
        for (size_t i = 0; i < m.torsion.size(); ++i) os << (i ? "," : "") << m.torsion[i];
        os << "\n";
    }
    return os.str();
}

Json answer_to_json(const GradedAnswer& a) {
    Json j;
    j["entries"] = Json::array();
    for (const auto& [key, m] : a.entries) {
        auto [deg, w] = key;
        j["entries"].push_back(
            {{"degree", deg}, {"w", w}, {"free", m.free_rank}, {"torsion", m.torsion}});
    }
    return j;
}

std::string answer_to_pretty(const GradedAnswer& a, long p) {
    std::ostringstream os;
    for (const auto& [key, m] : a.entries) {
        auto [deg, w] = key;
        os << "weight " << w << ", degree " << deg << ": ";
        bool first = true;
        if (m.free_rank > 0) {
            os << "R^" << m.free_rank;
            first = false;
        }
        for (int e : m.torsion) {
            if (!first) os << " + ";
            os << "Z/" << p << "^" << e;
            first = false;
        }
        if (first) os << "0";
        os << "\n";
    }
    return os.str();
}

std::vector<DifferentialAssertion> assertions_from_json(const Json& j) {
    std::vector<DifferentialAssertion> out;
    for (const auto& entry : j) {
        DifferentialAssertion a;
        a.r = entry.at("r");
        a.source = {entry.at("source")[0], entry.at("source")[1], entry.at("source")[2]};
        std::string eff = entry.value("effect", "surjects_onto_torsion");
        a.effect = eff == "dies" ? DifferentialAssertion::Effect::Dies
                                 : DifferentialAssertion::Effect::SurjectsOntoTorsion;
        out.push_back(a);
    }
    return out;
}

}  // namespace hce
