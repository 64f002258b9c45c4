#include "pw/freecat/pivotal.hpp"

#include <sstream>

namespace pw::freecat {

namespace {

std::vector<CentreObject> objects_up_to(std::uint32_t bound) {
    std::vector<CentreObject> out;
    for (std::uint32_t n = 0; n <= bound; ++n) {
        auto level = enumerate_half_braidings(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::string fingerprint(const PivotalAssignment& p, std::uint32_t bound) {
    std::ostringstream os;
    for (const auto& c : objects_up_to(bound)) os << to_text(p.value(c)) << ";";
    return os.str();
}

}  // namespace

Diagram zeta(const CentreObject& c) { return decoration_diagram(c.hb.phi); }

PivotalAssignment lift_id_assignment() {
    return {"lift_id", [](const CentreObject& c) { return identity(c.n); }};
}

PivotalAssignment lift_rho_assignment() {
    return {"lift_rho", [](const CentreObject& c) {
                return decoration_diagram(std::vector<std::uint8_t>(c.n, 1));
            }};
}

PivotalAssignment zeta_assignment() {
    return {"zeta", [](const CentreObject& c) { return zeta(c); }};
}

PivotalAssignment heap_composite(const PivotalAssignment& p, const PivotalAssignment& q,
                                 const PivotalAssignment& r) {
    auto pv = p.value, qv = q.value, rv = r.value;
    return {"<" + p.name + "," + q.name + "," + r.name + ">",
            [pv, qv, rv](const CentreObject& c) {
                return compose(pv(c), compose(inverse_automorphism(qv(c)), rv(c)));
            }};
}

bool assignments_equal(const PivotalAssignment& p, const PivotalAssignment& q,
                       std::uint32_t bound) {
    for (const auto& c : objects_up_to(bound))
        if (!(p.value(c) == q.value(c))) return false;
    return true;
}

PivotalReport verify_pivotal(const PivotalAssignment& p, std::uint32_t bound) {
    PivotalReport rep;
    auto objects = objects_up_to(bound);

    rep.automorphic = true;
    for (const auto& c : objects) {
        Diagram v = p.value(c);
        if (v.n != c.n || v.m != c.n || v.plain_loops || v.decorated_loops) {
            rep.automorphic = false;
            rep.witness = "non-automorphism value " + to_text(v);
            return rep;
        }
        try {
            decompose_automorphism(v);
        } catch (const NotAutomorphism&) {
            rep.automorphic = false;
            rep.witness = "non-automorphism value " + to_text(v);
            return rep;
        }
    }

    rep.monoidal = true;
    for (const auto& c1 : objects)
        for (const auto& c2 : objects) {
            if (c1.n + c2.n > bound) continue;
            CentreObject prod = centre_tensor(c1, c2);
            if (!(p.value(prod) == tensor(p.value(c1), p.value(c2)))) {
                rep.monoidal = false;
                rep.witness = "monoidality fails on widths " + std::to_string(c1.n) + "+" +
                              std::to_string(c2.n);
                return rep;
            }
        }

    // naturality against every lift of an identity or generator: these are
    // the squares that define the verification (the witness records the
    // truncation bound used)
    struct Gen {
        Diagram d;
        const char* name;
    };
    std::vector<Gen> gens{{rho(), "rho"}, {sigma(), "sigma"}, {ev(), "ev"}, {coev(), "coev"}};
    for (std::uint32_t n = 0; n <= bound; ++n) gens.push_back({identity(n), "id"});
    rep.natural = true;
    for (const auto& gen : gens) {
        const Diagram& h = gen.d;
        if (h.n > bound || h.m > bound) continue;
        for (const auto& c1 : objects) {
            if (c1.n != h.n) continue;
            for (const auto& c2 : objects) {
                if (c2.n != h.m) continue;
                if (!is_centre_morphism(h, c1, c2)) continue;
                Diagram lhs = compose(p.value(c2), h);
                Diagram rhs = compose(dual(dual(h)), p.value(c1));
                if (!(lhs == rhs)) {
                    rep.natural = false;
                    rep.witness = std::string("naturality fails for ") + gen.name + " lift " +
                                  to_text(h);
                    return rep;
                }
            }
        }
    }
    rep.witness = "verified up to width " + std::to_string(bound);
    return rep;
}

heap::FiniteHeap piv_heap(const std::vector<PivotalAssignment>& assignments,
                          std::uint32_t bound) {
    const std::size_t k = assignments.size();
    std::vector<std::string> prints(k);
    std::vector<std::string> labels(k);
    for (std::size_t i = 0; i < k; ++i) {
        prints[i] = fingerprint(assignments[i], bound);
        labels[i] = assignments[i].name;
    }
    std::vector<std::size_t> table(k * k * k, 0);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            for (std::size_t z = 0; z < k; ++z) {
                PivotalAssignment comp =
                    heap_composite(assignments[x], assignments[y], assignments[z]);
                std::string fp = fingerprint(comp, bound);
                std::size_t hit = k;
                for (std::size_t t = 0; t < k; ++t)
                    if (prints[t] == fp) {
                        hit = t;
                        break;
                    }
                if (hit == k)
                    throw ClosureViolation("heap law escapes the supplied assignments at <" +
                                               labels[x] + "," + labels[y] + "," + labels[z] + ">",
                                           comp);
                table[(x * k + y) * k + z] = hit;
            }
    return heap::make_raw_heap(std::move(labels), std::move(table));
}

NonInducednessReport non_inducedness_report(std::uint32_t bound) {
    NonInducednessReport rep;
    // Pivotal structures of the base category are determined by their value
    // on X, an automorphism of X; count those by the classification engine.
    rep.pic_size = all_automorphisms(1).size();

    PivotalAssignment pid = lift_id_assignment();
    PivotalAssignment prho = lift_rho_assignment();
    PivotalAssignment pz = zeta_assignment();
    rep.lift_id_pivotal = verify_pivotal(pid, bound).passed();
    rep.lift_rho_pivotal = verify_pivotal(prho, bound).passed();
    rep.zeta_pivotal = verify_pivotal(pz, bound).passed();

    std::vector<const PivotalAssignment*> verified;
    if (rep.lift_id_pivotal) verified.push_back(&pid);
    if (rep.lift_rho_pivotal) verified.push_back(&prho);
    if (rep.zeta_pivotal) verified.push_back(&pz);
    rep.distinct_verified = 0;
    for (std::size_t i = 0; i < verified.size(); ++i) {
        bool dup = false;
        for (std::size_t j = 0; j < i && !dup; ++j)
            if (assignments_equal(*verified[i], *verified[j], bound)) dup = true;
        if (!dup) ++rep.distinct_verified;
    }

    rep.zeta_induced =
        assignments_equal(pz, pid, bound) || assignments_equal(pz, prho, bound);
    std::ostringstream os;
    for (const auto& c : enumerate_half_braidings(1))
        os << "(s=id, phi=" << static_cast<int>(c.hb.phi[0]) << ", j=" << static_cast<int>(c.hb.j)
           << ") -> " << to_text(zeta(c)) << "; ";
    rep.witness = os.str();
    return rep;
}

}  // namespace pw::freecat
