#include "nucleus/galois.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_set>

namespace nucleus::galois {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) throw LabelError(std::string("duplicate ") + what + " label '" + l + "'");
    }
}

Subset from_labels(const std::vector<std::string>& universe, std::span<const std::string> labels,
                   const char* what) {
    Subset s = Subset::Constant(static_cast<Eigen::Index>(universe.size()), false);
    for (const auto& l : labels) {
        auto it = std::find(universe.begin(), universe.end(), l);
        if (it == universe.end()) throw LabelError(std::string("unknown ") + what + " '" + l + "'");
        s(it - universe.begin()) = true;
    }
    return s;
}

std::vector<std::string> to_labels(const std::vector<std::string>& universe, const Subset& s) {
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i)) out.push_back(universe[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::string brace(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    return out + "}";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void require_concept(const Context& ctx, const Concept& c, const char* what) {
    if (!is_concept(ctx, c)) throw PreconditionError(std::string(what) + ": argument is not a concept");
}

}  // namespace

Context::Context(std::vector<std::string> objects, std::vector<std::string> attributes, Profunctor<bool> incidence,
                 std::string name)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      incidence_(std::move(incidence)),
      name_(std::move(name)) {
    require_unique(objects_, "object");
    require_unique(attributes_, "attribute");
    if (incidence_.rows() != static_cast<Eigen::Index>(objects_.size()) ||
        incidence_.cols() != static_cast<Eigen::Index>(attributes_.size())) {
        throw SizeError("context: incidence is " + std::to_string(incidence_.rows()) + "x" +
                        std::to_string(incidence_.cols()) + " but there are " + std::to_string(objects_.size()) +
                        " objects and " + std::to_string(attributes_.size()) + " attributes");
    }
}

Subset Context::objects_from_labels(std::span<const std::string> labels) const {
    return from_labels(objects_, labels, "object");
}

Subset Context::attributes_from_labels(std::span<const std::string> labels) const {
    return from_labels(attributes_, labels, "attribute");
}

std::vector<std::string> Context::object_labels(const Subset& s) const { return to_labels(objects_, s); }
std::vector<std::string> Context::attribute_labels(const Subset& t) const { return to_labels(attributes_, t); }

Subset polar_up(const Context& ctx, const Subset& s) { return push(ctx.incidence(), s); }
Subset polar_down(const Context& ctx, const Subset& t) { return pull(ctx.incidence(), t); }
Subset close_extent(const Context& ctx, const Subset& s) { return closure(ctx.incidence(), s, Side::Pre); }
Subset close_intent(const Context& ctx, const Subset& t) { return closure(ctx.incidence(), t, Side::Opco); }

bool is_subset(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) throw SizeError("is_subset: length mismatch");
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a(i) && !b(i)) return false;
    }
    return true;
}

bool is_concept(const Context& ctx, const Concept& c) {
    if (c.extent.size() != ctx.object_count() || c.intent.size() != ctx.attribute_count()) return false;
    return polar_up(ctx, c.extent) == c.intent && polar_down(ctx, c.intent) == c.extent;
}

Concept concept_of_extent(const Context& ctx, const Subset& s) {
    Subset intent = polar_up(ctx, s);
    Subset extent = polar_down(ctx, intent);
    return {std::move(extent), std::move(intent)};
}

ConceptLattice enumerate_concepts(const Context& ctx) {
    const Eigen::Index n = ctx.object_count();
    ConceptLattice lattice;

    // NextClosure: extents in lectic order, index 0 most significant.
    Subset current = close_extent(ctx, Subset::Constant(n, false));
    lattice.concepts.push_back({current, polar_up(ctx, current)});
    for (;;) {
        bool advanced = false;
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            if (current(i)) continue;
            Subset seed = current;
            seed.tail(n - i).setConstant(false);
            seed(i) = true;
            Subset next = close_extent(ctx, seed);
            if (next.head(i) == current.head(i)) {
                current = std::move(next);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
        lattice.concepts.push_back({current, polar_up(ctx, current)});
    }

    const auto m = static_cast<Eigen::Index>(lattice.concepts.size());
    lattice.order.resize(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            lattice.order(i, j) = is_subset(lattice.concepts[i].extent, lattice.concepts[j].extent);
        }
    }
    return lattice;
}

Concept lattice_meet(const Context& ctx, const Concept& c1, const Concept& c2) {
    require_concept(ctx, c1, "lattice_meet");
    require_concept(ctx, c2, "lattice_meet");
    const std::array<NucleusPair<bool>, 2> pairs{{{c1.extent, c1.intent}, {c2.extent, c2.intent}}};
    auto p = nucleus_product(ctx.incidence(), std::span<const NucleusPair<bool>>(pairs));
    return {std::move(p.pre), std::move(p.opco)};
}

Concept lattice_join(const Context& ctx, const Concept& c1, const Concept& c2) {
    require_concept(ctx, c1, "lattice_join");
    require_concept(ctx, c2, "lattice_join");
    const std::array<NucleusPair<bool>, 2> pairs{{{c1.extent, c1.intent}, {c2.extent, c2.intent}}};
    auto p = nucleus_coproduct(ctx.incidence(), std::span<const NucleusPair<bool>>(pairs));
    return {std::move(p.pre), std::move(p.opco)};
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relation(const ConceptLattice& lattice) {
    const std::size_t m = lattice.concepts.size();
    auto strictly_below = [&](std::size_t i, std::size_t j) {
        return i != j && lattice.order(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    };
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!strictly_below(i, j)) continue;
            bool covered = true;
            for (std::size_t k = 0; k < m && covered; ++k) {
                if (strictly_below(i, k) && strictly_below(k, j)) covered = false;
            }
            if (covered) covers.emplace_back(i, j);
        }
    }
    return covers;
}

std::string export_dot(const Context& ctx, const ConceptLattice& lattice) {
    std::ostringstream out;
    out << "digraph concepts {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box];\n";
    for (std::size_t i = 0; i < lattice.concepts.size(); ++i) {
        const auto& c = lattice.concepts[i];
        out << "  c" << i << " [label=\"" << dot_escape(brace(ctx.object_labels(c.extent))) << "\\n"
            << dot_escape(brace(ctx.attribute_labels(c.intent))) << "\"];\n";
    }
    for (const auto& [lo, hi] : cover_relation(lattice)) {
        out << "  c" << lo << " -> c" << hi << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace nucleus::galois
