#include "tsurf/curves/profiles.hpp"

#include <algorithm>
#include <stdexcept>

#include "tsurf/tsing/tchain.hpp"

namespace tsurf {

std::vector<MenuEntry> codiscrepancy_menu(const std::vector<long>& first, const std::vector<long>& second) {
    std::vector<MenuEntry> menu;
    const std::vector<long>* chains[] = {&first, &second};
    for (int k = 0; k < 2; ++k) {
        const auto& chain = *chains[k];
        if (chain.empty()) continue;
        if (chain.size() > 26) throw std::invalid_argument("strings longer than 26 curves are not named");
        Codiscrepancy cd = codiscrepancy(chain);
        for (std::size_t i = 0; i < chain.size(); ++i)
            menu.push_back({std::string(1, static_cast<char>('A' + i)) + std::to_string(k + 1), -chain[i],
                            cd.coefficients[i]});
    }
    return menu;
}

std::string GammaProfile::str() const {
    std::string s;
    for (const auto& [n, m] : incidences) s += (s.empty() ? "" : " + ") + (m == 1 ? "" : std::to_string(m)) + n;
    return (s.empty() ? "0" : s) + " (K_X = " + kx.get_str() + ")";
}

std::vector<GammaProfile> enumerate_gamma_profiles(const std::vector<MenuEntry>& menu, const KxBounds& bounds,
                                                   const std::map<std::string, long>& caps) {
    for (const auto& [n, c] : caps) {
        if (std::none_of(menu.begin(), menu.end(), [&](const MenuEntry& e) { return e.name == n; }))
            throw std::invalid_argument("cap on '" + n + "', which is not in the menu");
        if (c < 0) throw std::invalid_argument("negative cap on '" + n + "'");
    }
    if (bounds.hi < bounds.lo) return {};
    for (const auto& e : menu)
        if (e.coefficient <= 0) throw std::invalid_argument("codiscrepancy coefficient of '" + e.name + "' is not positive");
    const Rational top = 1 + bounds.hi;
    std::vector<long> limit;
    for (const auto& e : menu) {
        Rational q = top / e.coefficient;
        long l = mpz_class(q.get_num() / q.get_den()).get_si();
        if (auto it = caps.find(e.name); it != caps.end()) l = std::min(l, it->second);
        limit.push_back(l);
    }

    std::vector<GammaProfile> out;
    std::vector<long> x(menu.size(), 0);
    // depth-first over the menu; the partial sum only grows
    auto rec = [&](auto&& self, std::size_t i, const Rational& sum) -> void {
        if (sum > top) return;
        if (i == menu.size()) {
            Rational kx = sum - 1;
            if (kx < bounds.lo || kx > bounds.hi) return;
            GammaProfile p;
            for (std::size_t k = 0; k < menu.size(); ++k)
                if (x[k]) p.incidences[menu[k].name] = x[k];
            p.delta = sum;
            p.kx = kx;
            out.push_back(std::move(p));
            return;
        }
        for (long m = 0; m <= limit[i]; ++m) {
            x[i] = m;
            Rational s = sum + menu[i].coefficient * m;
            if (s > top) break;
            self(self, i + 1, s);
        }
        x[i] = 0;
    };
    if (!menu.empty()) rec(rec, 0, Rational(0));
    std::sort(out.begin(), out.end(), [](const GammaProfile& a, const GammaProfile& b) {
        if (a.kx != b.kx) return a.kx < b.kx;
        return a.incidences < b.incidences;
    });
    return out;
}

std::vector<GammaProfile> enumerate_gamma_profiles(const std::vector<long>& first, const std::vector<long>& second,
                                                   const KxBounds& bounds, const std::map<std::string, long>& caps) {
    return enumerate_gamma_profiles(codiscrepancy_menu(first, second), bounds, caps);
}

}  // namespace tsurf
