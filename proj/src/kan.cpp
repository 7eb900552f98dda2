#include "simplicial/kan.hpp"

#include <sstream>
#include <stdexcept>

namespace simplicial {

namespace {

constexpr std::size_t kKeptFailures = 20;

void check_shape(const HornMap& h) {
    if (h.n < 1) throw std::invalid_argument("horn dimension must be at least 1");
    if (h.k < 0 || h.k > h.n) throw std::invalid_argument("horn index out of range");
    if (static_cast<int>(h.faces.size()) != h.n + 1) throw std::invalid_argument("horn needs n + 1 face slots");
    for (int i = 0; i <= h.n; ++i) {
        if (i == h.k) continue;
        if (!h.faces[i]) throw std::invalid_argument("horn face " + std::to_string(i) + " missing");
        if (h.faces[i]->dim() != h.n - 1) throw std::invalid_argument("horn face " + std::to_string(i) + " has the wrong dimension");
    }
}

bool matches(const SimplicialSet& k, const SimplexRef& x, const HornMap& h) {
    for (int i = 0; i <= h.n; ++i)
        if (i != h.k && k.face(x, i) != *h.faces[i]) return false;
    return true;
}

void record(LiftingReport& report, LiftingFailure failure) {
    ++report.failure_count;
    if (report.failures.size() < kKeptFailures) report.failures.push_back(std::move(failure));
}

}  // namespace

bool HornMap::is_compatible(const SimplicialSet& target) const {
    check_shape(*this);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
            if (i == k || j == k) continue;
            if (target.face(*faces[j], i) != target.face(*faces[i], j - 1)) return false;
        }
    return true;
}

std::string HornMap::to_string() const {
    std::string out = "Lambda[" + std::to_string(n) + "]_" + std::to_string(k) + " {";
    bool first = true;
    for (int i = 0; i <= n; ++i) {
        if (i == k) continue;
        out += (first ? "" : ", ") + std::string("d") + std::to_string(i) + "=" + simplicial::to_string(*faces[i]);
        first = false;
    }
    return out + "}";
}

std::vector<SimplexRef> fill_horn(const SimplicialSet& k, const HornMap& h) {
    if (!h.is_compatible(k)) throw std::invalid_argument("horn faces are not compatible");
    std::vector<SimplexRef> out;
    for (const auto& x : k.all_simplices(h.n))
        if (matches(k, x, h)) out.push_back(x);
    return out;
}

std::vector<SimplexRef> relative_lifts(const SimplicialMap& f, const HornMap& h, const SimplexRef& y) {
    std::vector<SimplexRef> out;
    for (const auto& x : f.source().all_simplices(h.n))
        if (matches(f.source(), x, h) && f.apply(x) == y) out.push_back(x);
    return out;
}

std::string LiftingFailure::to_string() const {
    std::string out = horn.to_string();
    if (target) out += " over " + simplicial::to_string(*target);
    return out + ": " + std::to_string(lifts) + (lifts == 1 ? " lift" : " lifts");
}

std::string LiftingReport::to_text() const {
    std::ostringstream out;
    out << "lifting problems through dimension " << up_to << ": " << problems << ", failures: " << failure_count << '\n';
    for (const auto& f : failures) out << "  " << f.to_string() << '\n';
    if (failure_count > failures.size()) out << "  ... " << failure_count - failures.size() << " more\n";
    return out.str();
}

LiftingReport kan_check(const SimplicialSet& k, int up_to) {
    LiftingReport report;
    report.up_to = up_to;
    for (int n = 1; n <= up_to; ++n) {
        const auto simplices = k.all_simplices(n);
        for_each_horn(k, n, [&](const HornMap& h) {
            ++report.problems;
            std::size_t fillers = 0;
            for (const auto& x : simplices)
                if (matches(k, x, h)) ++fillers;
            if (fillers == 0) record(report, {h, std::nullopt, 0});
            return true;
        });
    }
    return report;
}

LiftingReport relative_lifting_check(const SimplicialMap& f, int up_to, Lifts requirement) {
    LiftingReport report;
    report.up_to = up_to;
    const auto& e = f.source();
    const auto& b = f.target();
    for (int n = 1; n <= up_to; ++n) {
        const auto above = e.all_simplices(n);
        const auto below = b.all_simplices(n);
        for_each_horn(e, n, [&](const HornMap& h) {
            for (const auto& y : below) {
                bool extends = true;
                for (int i = 0; i <= n && extends; ++i)
                    if (i != h.k) extends = b.face(y, i) == f.apply(*h.faces[i]);
                if (!extends) continue;
                ++report.problems;
                std::size_t lifts = 0;
                for (const auto& x : above)
                    if (f.apply(x) == y && matches(e, x, h)) ++lifts;
                if (lifts == 0 || (requirement == Lifts::ExactlyOne && lifts > 1)) record(report, {h, y, lifts});
            }
            return true;
        });
    }
    return report;
}

LiftingReport fibration_check(const SimplicialMap& f, int up_to) {
    return relative_lifting_check(f, up_to, Lifts::AtLeastOne);
}

}  // namespace simplicial
