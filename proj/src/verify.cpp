#include "monoclif/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "monoclif/bargmann.hpp"
#include "monoclif/hermite.hpp"

namespace monoclif {

int VerifyReport::passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.equal ? 1 : 0;
    return n;
}

int VerifyReport::failed() const { return static_cast<int>(cases.size()) - passed(); }

Json to_json(const VerifyReport& report) {
    Json out;
    out["suite"] = report.suite;
    Json arr = Json::array();
    for (const auto& c : report.cases) {
        Json jc;
        jc["name"] = c.name;
        jc["parameters"] = c.parameters;
        jc["lhs"] = c.lhs;
        jc["rhs"] = c.rhs;
        jc["equal"] = c.equal;
        jc["elapsed_ms"] = c.elapsed_ms;
        arr.push_back(std::move(jc));
    }
    out["cases"] = std::move(arr);
    Json summary;
    summary["total"] = report.cases.size();
    summary["passed"] = report.passed();
    summary["failed"] = report.failed();
    out["summary"] = std::move(summary);
    return out;
}

// ---------------------------------------------------------------------------
// generators

std::vector<Monomial> enumerate_monomials(int m, int degree) {
    std::vector<Monomial> out;
    Monomial mono = Monomial::unit(m);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m - 1) {
            mono.exps[pos] = left;
            out.push_back(mono);
            mono.exps[pos] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            mono.exps[pos] = e;
            self(self, pos + 1, left - e);
        }
        mono.exps[pos] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

MultiVector random_multivector(Rng& rng, int m, int max_blades, bool allow_imaginary) {
    MultiVector v(m);
    const int blades = rng.uniform(1, max_blades);
    for (int i = 0; i < blades; ++i) {
        const BladeMask mask = static_cast<BladeMask>(rng.uniform(0, (1 << m) - 1));
        v.add_term(mask, rng.small_crational(allow_imaginary));
    }
    return v;
}

CliffPoly random_homogeneous(Rng& rng, int m, int k, VarRole role, bool allow_imaginary) {
    CliffPoly p(m, role);
    for (const Monomial& mono : enumerate_monomials(m, k)) {
        if (rng.uniform(0, 2) == 0) continue;
        p.add_term(mono, random_multivector(rng, m, 2, allow_imaginary));
    }
    if (p.is_zero()) {
        Monomial mono = Monomial::unit(m);
        mono.exps[0] = k;
        p.add_term(mono, MultiVector::scalar(m, CRational(1)));
    }
    return p;
}

CliffPoly random_monogenic(Rng& rng, int m, int k) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        const CliffPoly M = fischer_decompose(random_homogeneous(rng, m, k)).parts.front();
        if (!M.is_zero()) return M;
    }
    const auto frames = orthonormal_frames(m, 1);
    return plane_wave(frames[0].first, frames[0].second, k);
}

CliffPoly random_harmonic(Rng& rng, int m, int k) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        const FischerParts parts = fischer_decompose(random_homogeneous(rng, m, k));
        CliffPoly h = parts.parts.front();
        if (k >= 1) h += vector_mul(Side::Left, parts.parts[1]);
        if (!h.is_zero()) return h;
    }
    const auto frames = orthonormal_frames(m, 1);
    return plane_wave(frames[0].first, frames[0].second, k);
}

std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> orthonormal_frames(
    int m, std::size_t count) {
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> out;
    auto axis = [m](int j) {
        std::vector<Rational> v(m, Rational(0));
        v[j - 1] = 1;
        return v;
    };
    auto planted = [m](int i, int j, const Rational& a, const Rational& b) {
        std::vector<Rational> v(m, Rational(0));
        v[i - 1] = a;
        v[j - 1] = b;
        return v;
    };
    auto tilted = [m](std::initializer_list<Rational> t3, std::initializer_list<Rational> s3) {
        std::vector<Rational> t(m, Rational(0)), s(m, Rational(0));
        int i = 0;
        for (const Rational& c : t3) t[i++] = c;
        i = 0;
        for (const Rational& c : s3) s[i++] = c;
        return std::make_pair(std::move(t), std::move(s));
    };
    // Axis pairs first, then frames from Pythagorean quadruples that mix
    // three coordinates at once (plane-bound frames alone cannot span the
    // degree-k monogenics for m >= 3), then in-plane rotations.
    for (int i = 1; i <= m && out.size() < count; ++i)
        for (int j = 1; j <= m && out.size() < count; ++j)
            if (i != j) out.emplace_back(axis(i), axis(j));
    if (m >= 3) {
        const Rational o3(1, 3), t3(2, 3);
        const Rational a7(2, 7), b7(3, 7), c7(6, 7);
        const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> skew = {
            tilted({o3, t3, t3}, {t3, o3, -t3}),
            tilted({o3, t3, t3}, {t3, -t3, o3}),
            tilted({t3, o3, t3}, {o3, t3, -t3}),
            tilted({t3, t3, o3}, {t3, -o3, -t3}),
            tilted({a7, b7, c7}, {c7, a7, -b7}),
            tilted({b7, c7, a7}, {a7, -b7, c7}),
        };
        for (const auto& fr : skew)
            if (out.size() < count) out.push_back(fr);
    }
    const std::vector<std::pair<Rational, Rational>> pyth = {
        {Rational(3, 5), Rational(4, 5)}, {Rational(5, 13), Rational(12, 13)},
        {Rational(8, 17), Rational(15, 17)}};
    for (const auto& [a, b] : pyth) {
        for (int i = 1; i <= m && out.size() < count; ++i) {
            for (int j = i + 1; j <= m && out.size() < count; ++j) {
                out.emplace_back(planted(i, j, a, b), planted(i, j, -b, a));
                if (out.size() < count) out.emplace_back(planted(i, j, b, a), planted(i, j, a, -b));
            }
        }
    }
    // Mixed frames: a rotated vector paired with an untouched axis.
    for (int t = 3; t <= m && out.size() < count; ++t)
        out.emplace_back(planted(1, 2, Rational(3, 5), Rational(4, 5)), axis(t));
    if (out.size() > count) out.resize(count);
    return out;
}

// ---------------------------------------------------------------------------
// case machinery

namespace {

using CaseFn = std::function<VerifyCase()>;

std::string to_str(const MultiVector& v) { return v.str(); }
std::string to_str(const CliffPoly& p) { return p.str(); }
std::string to_str(const BiPoly& p) { return p.str(); }
std::string to_str(const Rational& r) { return r.str(); }
std::string to_str(const ScalarPoly& p) { return p.str(); }
std::string to_str(const std::string& s) { return s; }

template <typename Fn>
CaseFn eq_case(std::string name, std::string params, Fn fn) {
    return [name = std::move(name), params = std::move(params), fn = std::move(fn)]() {
        VerifyCase c;
        c.name = name;
        c.parameters = params;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const auto [lhs, rhs] = fn();
            c.equal = lhs == rhs;
            c.lhs = to_str(lhs);
            c.rhs = to_str(rhs);
        } catch (const std::exception& e) {
            c.equal = false;
            c.lhs = std::string("exception: ") + e.what();
            c.rhs = "";
        }
        const auto t1 = std::chrono::steady_clock::now();
        c.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return c;
    };
}

/// For identities checked over many instances inside one case: fn returns an
/// empty string on success or the first offending instance.
CaseFn check_case(std::string name, std::string params, std::function<std::string()> fn) {
    return eq_case(std::move(name), std::move(params),
                   [fn = std::move(fn)]() -> std::pair<std::string, std::string> {
                       const std::string failure = fn();
                       if (failure.empty()) return {"identity holds", "identity holds"};
                       return {failure, "identity holds"};
                   });
}

std::vector<VerifyCase> run_cases(const std::vector<CaseFn>& jobs) {
    std::vector<VerifyCase> out(jobs.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(jobs.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                out[i] = jobs[i]();
            }
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

void append(std::vector<CaseFn>& into, std::vector<CaseFn> more) {
    for (auto& fn : more) into.push_back(std::move(fn));
}

std::string param_str(std::initializer_list<std::pair<const char*, long>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << " ";
        first = false;
        os << k << "=" << v;
    }
    return os.str();
}

CliffPoly scalar_monomial(int m, VarRole role, const Monomial& mono) {
    CliffPoly p(m, role);
    p.add_term(mono, MultiVector::scalar(m, CRational(1)));
    return p;
}

CliffPoly vector_power_times(const CliffPoly& p, int j) {
    CliffPoly out = p;
    for (int i = 0; i < j; ++i) out = vector_mul(Side::Left, out);
    return out;
}

/// Pool of monogenic homogeneous P_k used by the transform criteria: the
/// first two plane-wave frames plus one seeded projected monogenic.
std::vector<CliffPoly> monogenic_pool(int m, int k, std::uint64_t seed) {
    std::vector<CliffPoly> pool;
    const auto frames = orthonormal_frames(m, 2);
    for (const auto& [t, s] : frames) pool.push_back(plane_wave(t, s, k));
    Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 32) ^ static_cast<std::uint64_t>(k));
    pool.push_back(random_monogenic(rng, m, k));
    return pool;
}

// ---------------------------------------------------------------------------
// criterion case builders

std::vector<CaseFn> cases_transform_1d(int kmax) {
    std::vector<CaseFn> out;
    for (int k = 0; k <= kmax; ++k) {
        out.push_back(eq_case("A1.transform_1d", param_str({{"k", k}}), [k]() {
            return std::make_pair(transform_1d(scalar_hermite(k)), ScalarPoly::monomial(k));
        }));
    }
    return out;
}

std::vector<CaseFn> cases_orthogonality_1d(int kmax) {
    std::vector<CaseFn> out;
    for (int l = 0; l <= kmax; ++l) {
        for (int k = 0; k <= kmax; ++k) {
            out.push_back(eq_case("A2.orthogonality_1d", param_str({{"l", l}, {"k", k}}), [l, k]() {
                const Rational lhs = inner_product_1d(scalar_hermite(l), scalar_hermite(k));
                const Rational rhs = l == k ? factorial(k) : Rational(0);
                return std::make_pair(lhs, rhs);
            }));
        }
    }
    return out;
}

void for_each_tuple(int m, int total_max, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> ks(m, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == m) {
            fn(ks);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            ks[pos] = e;
            self(self, pos + 1, left - e);
        }
        ks[pos] = 0;
    };
    rec(rec, 0, total_max);
}

std::vector<CaseFn> cases_multi_index(const std::vector<int>& ms, int total_max) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for_each_tuple(m, total_max, [&](const std::vector<int>& ks) {
            std::ostringstream ps;
            ps << "m=" << m << " k=(";
            for (std::size_t i = 0; i < ks.size(); ++i) ps << (i ? "," : "") << ks[i];
            ps << ")";
            const std::string params = ps.str();
            out.push_back(eq_case("A3.transform_multi_index", params, [m, ks]() {
                const GaussianSection f(multi_hermite(ks), Rational(1, 4));
                Monomial mono = Monomial::unit(m);
                mono.exps.assign(ks.begin(), ks.end());
                return std::make_pair(segal_bargmann(f), scalar_monomial(m, VarRole::Z, mono));
            }));
            out.push_back(eq_case("A3.norm_multi_index", params, [m, ks]() {
                const GaussianSection f(multi_hermite(ks), Rational(1, 4));
                Rational norm = 1;
                for (int k : ks) norm *= factorial(k);
                return std::make_pair(l2_inner_product(f, f),
                                      MultiVector::scalar(m, CRational(norm)));
            }));
        });
    }
    return out;
}

std::vector<CaseFn> cases_axis_plane_waves(const std::vector<int>& ms, int kmax) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 0; k <= kmax; ++k) {
            out.push_back(
                eq_case("A4.axis_plane_wave_transform", param_str({{"m", m}, {"k", k}}), [m, k]() {
                    const auto frames = orthonormal_frames(m, 1);
                    const CliffPoly P = plane_wave(frames[0].first, frames[0].second, k);
                    const CliffPoly lhs = segal_bargmann(GaussianSection(P, Rational(1, 4)));
                    return std::make_pair(lhs, P.with_role(VarRole::Z));
                }));
        }
    }
    return out;
}

std::vector<CaseFn> cases_transform_factorization(const std::vector<int>& ms, int smax, int kmax,
                                                  std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 0; k <= kmax; ++k) {
            const auto pool = monogenic_pool(m, k, seed);
            for (std::size_t pi = 0; pi < pool.size(); ++pi) {
                for (int s = 0; s <= smax; ++s) {
                    out.push_back(eq_case(
                        "A5.transform_factorization",
                        param_str({{"m", m}, {"s", s}, {"k", k}, {"P", static_cast<long>(pi)}}),
                        [s, k, P = pool[pi]]() { return transform_factorization_check(s, k, P); }));
                }
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_hermite_section_transform(const std::vector<int>& ms, int smax,
                                                    int kmax, std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 0; k <= kmax; ++k) {
            const auto pool = monogenic_pool(m, k, seed + 1);
            for (std::size_t pi = 0; pi < pool.size(); ++pi) {
                for (int s = 0; s <= smax; ++s) {
                    out.push_back(eq_case(
                        "A6.hermite_section_transform",
                        param_str({{"m", m}, {"s", s}, {"k", k}, {"P", static_cast<long>(pi)}}),
                        [s, k, P = pool[pi]]() {
                            const CliffPoly lhs = segal_bargmann(basis_section(s, k, P));
                            const CliffPoly rhs = vector_power_times(P.with_role(VarRole::Z), s);
                            return std::make_pair(lhs, rhs);
                        }));
                }
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_fischer_roundtrip(const std::vector<int>& ms, int kmax, int per_cell,
                                            std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 0; k <= kmax; ++k) {
            for (int i = 0; i < per_cell; ++i) {
                const std::string params =
                    param_str({{"m", m}, {"k", k}, {"case", i}});
                const std::uint64_t s =
                    seed ^ (static_cast<std::uint64_t>(m) << 40) ^
                    (static_cast<std::uint64_t>(k) << 20) ^ static_cast<std::uint64_t>(i);
                out.push_back(eq_case("A7.roundtrip", params, [m, k, s]() {
                    Rng rng(s);
                    const CliffPoly R = random_homogeneous(rng, m, k);
                    const FischerParts parts = fischer_decompose(R);
                    CliffPoly sum(m, R.role());
                    for (int j = 0; j <= parts.k; ++j)
                        sum += vector_power_times(parts.parts[j], j);
                    return std::make_pair(sum, R);
                }));
                out.push_back(check_case("A7.parts_monogenic", params, [m, k, s]() -> std::string {
                    Rng rng(s);
                    const CliffPoly R = random_homogeneous(rng, m, k);
                    const FischerParts parts = fischer_decompose(R);
                    for (int j = 0; j <= parts.k; ++j) {
                        if (!is_monogenic(parts.parts[j]))
                            return "part " + std::to_string(j) + " not monogenic";
                        const auto deg = euler_degree(parts.parts[j]);
                        if (!parts.parts[j].is_zero() && (!deg || *deg != parts.k - j))
                            return "part " + std::to_string(j) + " has wrong degree";
                    }
                    return "";
                }));
            }
        }
        // Uniqueness: decomposing x^j M returns M at position j, zero elsewhere.
        for (int k = 0; k <= std::min(kmax, 3); ++k) {
            for (int j = 0; j <= 3; ++j) {
                const std::string params = param_str({{"m", m}, {"k", k}, {"j", j}});
                const std::uint64_t s = seed + 77 + static_cast<std::uint64_t>(100 * m + 10 * k + j);
                out.push_back(check_case("A7.uniqueness", params, [m, k, j, s]() -> std::string {
                    Rng rng(s);
                    const CliffPoly M = random_monogenic(rng, m, k);
                    const CliffPoly R = vector_power_times(M, j);
                    const FischerParts parts = fischer_decompose(R);
                    for (int i = 0; i <= parts.k; ++i) {
                        const CliffPoly& expect = parts.parts[i];
                        if (i == j && expect != M) return "position j does not return M";
                        if (i != j && !expect.is_zero())
                            return "position " + std::to_string(i) + " is nonzero";
                    }
                    return "";
                }));
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_beta(const std::vector<int>& ms, int smax, int kmax) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 0; k <= kmax; ++k) {
            for (int s = 1; s <= smax; ++s) {
                out.push_back(eq_case("A8.beta", param_str({{"m", m}, {"s", s}, {"k", k}}),
                                      [m, s, k]() {
                                          const auto frames = orthonormal_frames(m, 1);
                                          const CliffPoly P =
                                              plane_wave(frames[0].first, frames[0].second, k);
                                          const CliffPoly lhs =
                                              dirac_left(vector_power_times(P, s));
                                          const CliffPoly rhs =
                                              vector_power_times(P, s - 1).scaled(beta(s, k, m));
                                          return std::make_pair(lhs, rhs);
                                      }));
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_zonal_routes(const std::vector<int>& ms_full, int kmax,
                                       bool include_m2) {
    std::vector<CaseFn> out;
    auto add_for = [&](int m, bool with_gegenbauer) {
        auto fischer = std::make_shared<ZonalTable>(build_zonal_table(m, kmax, ZonalRoute::Fischer));
        auto recursion =
            std::make_shared<ZonalTable>(build_zonal_table(m, kmax, ZonalRoute::Recursion));
        std::shared_ptr<ZonalTable> gegenbauer;
        if (with_gegenbauer)
            gegenbauer =
                std::make_shared<ZonalTable>(build_zonal_table(m, kmax, ZonalRoute::Gegenbauer));
        for (int k = 0; k <= kmax; ++k) {
            for (int s = 0; s <= k; ++s) {
                out.push_back(eq_case("A9.fischer_vs_recursion",
                                      param_str({{"m", m}, {"k", k}, {"s", s}}),
                                      [fischer, recursion, k, s]() {
                                          return std::make_pair(fischer->at(k, s),
                                                                recursion->at(k, s));
                                      }));
            }
            if (with_gegenbauer) {
                out.push_back(eq_case("A9.fischer_vs_gegenbauer",
                                      param_str({{"m", m}, {"k", k}, {"s", 0}}),
                                      [fischer, gegenbauer, k]() {
                                          return std::make_pair(fischer->at(k, 0),
                                                                gegenbauer->at(k, 0));
                                      }));
            }
        }
    };
    for (int m : ms_full) add_for(m, true);
    if (include_m2) add_for(2, false);
    return out;
}

std::vector<CaseFn> cases_table_integrity(const std::vector<int>& ms, int kmax) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        auto table = std::make_shared<ZonalTable>(build_zonal_table(m, kmax, ZonalRoute::Fischer));
        out.push_back(check_case("kernels.two_sided_system", param_str({{"m", m}, {"K", kmax}}),
                                 [table]() -> std::string {
                                     for (const auto& [ks, z] : table->entries) {
                                         if (!dirac_left(z, Slot::First).is_zero())
                                             return "d_x Z != 0 at (k=" + std::to_string(ks.first) +
                                                    ",s=" + std::to_string(ks.second) + ")";
                                         if (!dirac_right(z, Slot::Second).is_zero())
                                             return "Z d_u != 0 at (k=" + std::to_string(ks.first) +
                                                    ",s=" + std::to_string(ks.second) + ")";
                                         const auto dx = z.slot_homogeneous_degree(Slot::First);
                                         const auto du = z.slot_homogeneous_degree(Slot::Second);
                                         const int expect = ks.first - ks.second;
                                         if (!z.is_zero() && (dx != expect || du != expect))
                                             return "bidegree violation at (k=" +
                                                    std::to_string(ks.first) +
                                                    ",s=" + std::to_string(ks.second) + ")";
                                     }
                                     return "";
                                 }));
        for (int k = 0; k <= kmax; ++k) {
            out.push_back(eq_case("kernels.reassembly", param_str({{"m", m}, {"k", k}}),
                                  [table, m, k]() {
                                      BiPoly sum(m, table->role_first, table->role_second);
                                      for (int s = 0; s <= k; ++s) {
                                          BiPoly t = table->at(k, s);
                                          for (int i = 0; i < s; ++i) {
                                              t = vector_mul(Slot::First, Side::Left, t);
                                              t = vector_mul(Slot::Second, Side::Right, t);
                                          }
                                          sum += t;
                                      }
                                      return std::make_pair(sum, dot_power_kernel(
                                                                     k, m, table->role_first,
                                                                     table->role_second));
                                  }));
        }
        out.push_back(eq_case("kernels.exp_reassembly", param_str({{"m", m}, {"K", kmax}}),
                              [table, m, kmax]() {
                                  BiPoly sum(m, table->role_first, table->role_second);
                                  for (int s = 0; s <= kmax; ++s) {
                                      BiPoly t = fourier_borel_truncation(s, kmax, *table).value;
                                      for (int i = 0; i < s; ++i) {
                                          t = vector_mul(Slot::First, Side::Left, t);
                                          t = vector_mul(Slot::Second, Side::Right, t);
                                      }
                                      sum += t;
                                  }
                                  BiPoly taylor(m, table->role_first, table->role_second);
                                  for (int k = 0; k <= kmax; ++k)
                                      taylor += dot_power_kernel(k, m, table->role_first,
                                                                 table->role_second);
                                  return std::make_pair(sum, taylor);
                              }));
    }
    return out;
}

std::vector<CaseFn> cases_reproducing(const std::vector<int>& ms, int kmax, int K,
                                      std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        auto table = std::make_shared<ZonalTable>(build_zonal_table(m, K, ZonalRoute::Fischer));
        for (int k = 0; k <= kmax; ++k) {
            const auto pool = monogenic_pool(m, k, seed + 3);
            for (std::size_t pi = 0; pi < pool.size(); ++pi) {
                const std::string params =
                    param_str({{"m", m}, {"k", k}, {"P", static_cast<long>(pi)}});
                out.push_back(eq_case("A10.reproducing_zonal", params, [table, P = pool[pi]]() {
                    return reproducing_check(P, *table, ReproducingKernel::ZonalDegree);
                }));
                out.push_back(eq_case("A10.reproducing_fourier_borel", params,
                                      [table, P = pool[pi]]() {
                                          return reproducing_check(
                                              P, *table, ReproducingKernel::TruncatedFourierBorel);
                                      }));
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_isometry(const std::vector<int>& ms, int sk_max, std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        // Precompute the sections and their transforms once; pairings reuse them.
        struct Entry {
            std::string label;
            GaussianSection section;
            CliffPoly transform;
        };
        auto entries = std::make_shared<std::vector<Entry>>();
        for (int k = 0; k <= sk_max; ++k) {
            const auto pool = monogenic_pool(m, k, seed + 5);
            const std::size_t nwaves = k == 0 ? 1 : 2; // degree 0 frames coincide
            for (std::size_t pi = 0; pi < nwaves && pi < pool.size(); ++pi) {
                for (int s = 0; s + k <= sk_max; ++s) {
                    GaussianSection f = basis_section(s, k, pool[pi]);
                    CliffPoly bf = segal_bargmann(f);
                    std::ostringstream label;
                    label << "psi(s=" << s << ",k=" << k << ",P" << pi << ")";
                    entries->push_back(Entry{label.str(), std::move(f), std::move(bf)});
                }
            }
        }
        for (std::size_t i = 0; i < entries->size(); ++i) {
            for (std::size_t j = 0; j < entries->size(); ++j) {
                const std::string params = "m=" + std::to_string(m) + " f=" + (*entries)[i].label +
                                           " g=" + (*entries)[j].label;
                out.push_back(eq_case("A11.isometry", params, [entries, i, j]() {
                    const auto& a = (*entries)[i];
                    const auto& b = (*entries)[j];
                    return std::make_pair(l2_inner_product(a.section, b.section),
                                          bargmann_inner_product(a.transform, b.transform));
                }));
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_summand_orthogonality(const std::vector<int>& ms, int kmax,
                                                std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 1; k <= kmax; ++k) {
            for (int i = 0; i < 3; ++i) {
                const std::uint64_t s = seed ^ (static_cast<std::uint64_t>(m * 31 + k) << 16) ^
                                        static_cast<std::uint64_t>(i);
                out.push_back(check_case("A11.summand_orthogonality",
                                         param_str({{"m", m}, {"k", k}, {"case", i}}),
                                         [m, k, s]() -> std::string {
                                             Rng rng(s);
                                             const CliffPoly f =
                                                 random_homogeneous(rng, m, k, VarRole::Z);
                                             const FischerParts parts = fischer_decompose(f);
                                             std::vector<CliffPoly> summands;
                                             for (int j = 0; j <= parts.k; ++j)
                                                 summands.push_back(
                                                     vector_power_times(parts.parts[j], j));
                                             for (std::size_t a = 0; a < summands.size(); ++a)
                                                 for (std::size_t b = 0; b < summands.size(); ++b) {
                                                     if (a == b) continue;
                                                     if (!bargmann_inner_product(summands[a],
                                                                                 summands[b])
                                                              .is_zero())
                                                         return "summands " + std::to_string(a) +
                                                                "," + std::to_string(b) +
                                                                " not orthogonal";
                                                 }
                                             return "";
                                         }));
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_gaussian_fischer(const std::vector<int>& ms, int deg_max, int pairs,
                                           std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int i = 0; i < pairs; ++i) {
            const std::uint64_t s =
                seed ^ (static_cast<std::uint64_t>(m) << 24) ^ static_cast<std::uint64_t>(i * 7);
            out.push_back(eq_case("A12.harmonic_gaussian_fischer",
                                  param_str({{"m", m}, {"case", i}}), [m, deg_max, s]() {
                                      Rng rng(s);
                                      // Mix degrees; inhomogeneous harmonics are fair game.
                                      CliffPoly R = random_harmonic(rng, m, rng.uniform(0, deg_max));
                                      CliffPoly S = random_harmonic(rng, m, rng.uniform(0, deg_max));
                                      if (rng.coin()) R += random_harmonic(rng, m, rng.uniform(0, deg_max));
                                      return fischer_gaussian_identity_check(R, S);
                                  }));
            out.push_back(eq_case("A12.complex_bargmann_fischer",
                                  param_str({{"m", m}, {"case", i}}), [m, deg_max, s]() {
                                      Rng rng(s + 1);
                                      CliffPoly R(m, VarRole::X);
                                      CliffPoly S(m, VarRole::X);
                                      for (int d = 0; d <= deg_max; ++d) {
                                          if (rng.coin()) R += random_homogeneous(rng, m, d);
                                          if (rng.coin()) S += random_homogeneous(rng, m, d);
                                      }
                                      const MultiVector lhs = fischer_inner_product(R, S);
                                      const MultiVector rhs = bargmann_inner_product(
                                          R.with_role(VarRole::Z), S.with_role(VarRole::Z));
                                      return std::make_pair(lhs, rhs);
                                  }));
        }
    }
    return out;
}

std::vector<CaseFn> cases_bs_kernel_routes(const std::vector<int>& ms, int smax, int K) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        auto table = std::make_shared<ZonalTable>(
            build_zonal_table(m, K, ZonalRoute::Fischer, VarRole::Z, VarRole::X));
        for (int s = 1; s <= smax; ++s) {
            for (int k = s; k <= K; ++k) {
                out.push_back(eq_case("A13.bs_kernel", param_str({{"m", m}, {"s", s}, {"K", k}}),
                                      [table, m, s, k]() {
                                          return std::make_pair(bs_kernel(s, k, *table),
                                                                bs_kernel_from_series(s, k, m));
                                      }));
            }
        }
    }
    return out;
}

/// Seeded s-monogenic polynomial: sum_{j<s} x^j M_j with monogenic M_j.
CliffPoly random_s_monogenic(Rng& rng, int m, int s, int deg_max) {
    CliffPoly g(m, VarRole::X);
    for (int j = 0; j < s; ++j) {
        const int max_part = deg_max - j;
        if (max_part < 0) continue;
        const int k = rng.uniform(0, max_part);
        g += vector_power_times(random_monogenic(rng, m, k), j);
    }
    if (g.is_zero()) g = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
    return g;
}

std::vector<CaseFn> cases_weierstrass(const std::vector<int>& ms, int smax, int K,
                                      std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        auto table = std::make_shared<ZonalTable>(
            build_zonal_table(m, K, ZonalRoute::Fischer, VarRole::Z, VarRole::X));
        for (int s = 1; s <= smax; ++s) {
            for (int i = 0; i < 2; ++i) {
                const std::uint64_t sd = seed ^ (static_cast<std::uint64_t>(m * 13 + s) << 8) ^
                                         static_cast<std::uint64_t>(i);
                out.push_back(eq_case("A13.weierstrass_kernel",
                                      param_str({{"m", m}, {"s", s}, {"case", i}}),
                                      [table, m, s, K, sd]() {
                                          Rng rng(sd);
                                          const CliffPoly g =
                                              random_s_monogenic(rng, m, s, K - (s - 1) < 4
                                                                                ? K - (s - 1)
                                                                                : 4);
                                          return weierstrass_kernel_check(g, s, K, *table);
                                      }));
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_monogenic_reproduction(const std::vector<int>& ms, int degmax, std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 0; k <= degmax; ++k) {
            const auto pool = monogenic_pool(m, k, seed + 9);
            for (std::size_t pi = 0; pi < pool.size(); ++pi) {
                out.push_back(eq_case(
                    "A14.monogenic_reproduction",
                    param_str({{"m", m}, {"k", k}, {"P", static_cast<long>(pi)}}),
                    [g = pool[pi]]() {
                        const CliffPoly lhs =
                            monogenic_part_of_transform(GaussianSection(g, Rational(1, 4)));
                        return std::make_pair(lhs, g.with_role(VarRole::Z));
                    }));
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_heat_vs_moment(const std::vector<int>& ms, int degmax, int n,
                                         std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int i = 0; i < n; ++i) {
            const std::uint64_t s =
                seed ^ (static_cast<std::uint64_t>(m) << 18) ^ static_cast<std::uint64_t>(i * 3);
            out.push_back(eq_case("bargmann.heat_vs_moment", param_str({{"m", m}, {"case", i}}),
                                  [m, degmax, s]() {
                                      Rng rng(s);
                                      CliffPoly P(m, VarRole::X);
                                      for (int d = 0; d <= degmax; ++d)
                                          if (rng.coin()) P += random_homogeneous(rng, m, d);
                                      const GaussianSection f(P, Rational(1, 4));
                                      return std::make_pair(segal_bargmann(f),
                                                            segal_bargmann_moments(f));
                                  }));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// plane-wave span membership (exact rational linear algebra)

std::vector<Rational> flatten(const CliffPoly& p, const std::vector<Monomial>& monos, int m) {
    std::vector<Rational> out;
    out.reserve(monos.size() * (1u << m) * 2);
    for (const Monomial& mono : monos) {
        const MultiVector c = p.coefficient(mono);
        for (BladeMask mask = 0; mask < (BladeMask{1} << m); ++mask) {
            const CRational v = c.coefficient(mask);
            out.push_back(v.re);
            out.push_back(v.im);
        }
    }
    return out;
}

bool rational_in_span(const std::vector<std::vector<Rational>>& columns,
                      const std::vector<Rational>& target) {
    const std::size_t rows = target.size();
    const std::size_t cols = columns.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = columns[c][r];
        a[r][cols] = target[r];
    }
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] / a[pivot_row][col];
            for (std::size_t c = col; c <= cols; ++c) a[r][c] -= factor * a[pivot_row][c];
        }
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows; ++r)
        if (!a[r][cols].is_zero()) return false;
    // Rows above pivot_row may still be inconsistent if their coefficient
    // part is all zero; the elimination above leaves those only below.
    for (std::size_t r = 0; r < pivot_row; ++r) {
        bool all_zero = true;
        for (std::size_t c = 0; c < cols; ++c)
            if (!a[r][c].is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero && !a[r][cols].is_zero()) return false;
    }
    return true;
}

std::vector<CaseFn> cases_span_membership(const std::vector<int>& ms, int kmax,
                                          std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 0; k <= kmax; ++k) {
            for (int i = 0; i < 2; ++i) {
                const std::uint64_t s = seed ^ (static_cast<std::uint64_t>(m * 17 + k) << 12) ^
                                        static_cast<std::uint64_t>(i);
                out.push_back(check_case("kernels.plane_wave_span",
                                         param_str({{"m", m}, {"k", k}, {"case", i}}),
                                         [m, k, s]() -> std::string {
                                             Rng rng(s);
                                             const CliffPoly target =
                                                 random_monogenic(rng, m, k);
                                             const auto monos = enumerate_monomials(m, k);
                                             const auto frames = orthonormal_frames(m, 16);
                                             std::vector<std::vector<Rational>> columns;
                                             for (const auto& [t, sv] : frames) {
                                                 const CliffPoly w = plane_wave(t, sv, k);
                                                 for (BladeMask mask = 0;
                                                      mask < (BladeMask{1} << m); ++mask) {
                                                     columns.push_back(flatten(
                                                         w.mul_right(MultiVector::blade(
                                                             m, mask, CRational(1))),
                                                         monos, m));
                                                     columns.push_back(flatten(
                                                         w.mul_right(MultiVector::blade(
                                                             m, mask,
                                                             CRational(Rational(0), Rational(1)))),
                                                         monos, m));
                                                 }
                                             }
                                             if (!rational_in_span(columns,
                                                                   flatten(target, monos, m)))
                                                 return "monogenic part outside plane-wave span";
                                             return "";
                                         }));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// core / hermite suite material

std::vector<CaseFn> cases_clifford_core(const std::vector<int>& ms, std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        out.push_back(check_case("core.generator_relations", param_str({{"m", m}}),
                                 [m]() -> std::string {
                                     for (int j = 1; j <= m; ++j)
                                         for (int k = 1; k <= m; ++k) {
                                             const MultiVector ej = MultiVector::generator(m, j);
                                             const MultiVector ek = MultiVector::generator(m, k);
                                             MultiVector lhs = ej * ek + ek * ej;
                                             MultiVector rhs =
                                                 MultiVector::scalar(m, CRational(j == k ? -2 : 0));
                                             if (lhs != rhs)
                                                 return "e_j e_k + e_k e_j wrong at j=" +
                                                        std::to_string(j) +
                                                        " k=" + std::to_string(k);
                                         }
                                     return "";
                                 }));
        out.push_back(check_case("core.blade_basis_size", param_str({{"m", m}}),
                                 [m]() -> std::string {
                                     // products of basis blades close on the 2^m blade set
                                     std::size_t count = 0;
                                     for (BladeMask a = 0; a < (BladeMask{1} << m); ++a) {
                                         ++count;
                                         for (BladeMask b = 0; b < (BladeMask{1} << m); ++b) {
                                             const MultiVector p = MultiVector::blade(m, a, CRational(1)) *
                                                                   MultiVector::blade(m, b, CRational(1));
                                             if (p.terms().size() != 1)
                                                 return "blade product is not a single blade";
                                         }
                                     }
                                     if (count != (std::size_t{1} << m)) return "basis size mismatch";
                                     return "";
                                 }));
        out.push_back(check_case(
            "core.associativity", param_str({{"m", m}}), [m, seed]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 8));
                for (int i = 0; i < 10; ++i) {
                    const MultiVector a = random_multivector(rng, m, 8);
                    const MultiVector b = random_multivector(rng, m, 8);
                    const MultiVector c = random_multivector(rng, m, 8);
                    if ((a * b) * c != a * (b * c)) return "associativity failed on a random triple";
                }
                return "";
            }));
        out.push_back(check_case(
            "core.vector_square", param_str({{"m", m}}), [m, seed]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 9));
                for (int i = 0; i < 5; ++i) {
                    MultiVector x(m);
                    Rational norm = 0;
                    for (int j = 1; j <= m; ++j) {
                        const Rational c = rng.small_rational();
                        norm += c * c;
                        x += MultiVector::generator(m, j).scaled(c);
                    }
                    if (x * x != MultiVector::scalar(m, CRational(-norm)))
                        return "x^2 != -|x|^2 for a random 1-vector";
                }
                return "";
            }));
        out.push_back(check_case(
            "core.conjugation_antiautomorphism", param_str({{"m", m}}), [m, seed]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 10));
                for (int i = 0; i < 5; ++i) {
                    const MultiVector a = random_multivector(rng, m, 6);
                    const MultiVector b = random_multivector(rng, m, 6);
                    if ((a * b).conjugate() != b.conjugate() * a.conjugate())
                        return "conj(ab) != conj(b)conj(a)";
                    if ((a * b).hermitian_conjugate() !=
                        b.hermitian_conjugate() * a.hermitian_conjugate())
                        return "(ab)^dagger != b^dagger a^dagger";
                    if (a.hermitian_conjugate().hermitian_conjugate() != a)
                        return "dagger is not an involution";
                }
                return "";
            }));
        out.push_back(check_case(
            "core.dagger_positivity", param_str({{"m", m}}), [m, seed]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 11));
                for (int i = 0; i < 5; ++i) {
                    MultiVector x(m);
                    for (int j = 1; j <= m; ++j)
                        x += MultiVector::generator(m, j).scaled(rng.small_rational());
                    const MultiVector prod = x.hermitian_conjugate() * x;
                    if (prod.scalar_part().re.sign() < 0 || !prod.scalar_part().im.is_zero())
                        return "x^dagger x has no nonnegative scalar part";
                }
                return "";
            }));
        out.push_back(check_case(
            "core.dot_wedge_split", param_str({{"m", m}}), [m, seed]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 12));
                for (int i = 0; i < 5; ++i) {
                    MultiVector x(m), y(m);
                    for (int j = 1; j <= m; ++j) {
                        x += MultiVector::generator(m, j).scaled(rng.small_rational());
                        y += MultiVector::generator(m, j).scaled(rng.small_rational());
                    }
                    const auto [dxy, wxy] = dot_and_wedge(x, y);
                    const auto [dyx, wyx] = dot_and_wedge(y, x);
                    if (x * y != MultiVector::scalar(m, -dxy) + wxy)
                        return "xy != -<x,y> + x^y";
                    if (dxy != dyx) return "dot is not symmetric";
                    if (wxy != -wyx) return "wedge is not antisymmetric";
                }
                return "";
            }));
    }
    return out;
}

std::vector<CaseFn> cases_polynomial_core(const std::vector<int>& ms, std::uint64_t seed,
                                          int degmax) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        out.push_back(check_case(
            "core.poly_ring_axioms", param_str({{"m", m}}), [m, seed, degmax]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 13));
                for (int i = 0; i < 4; ++i) {
                    const CliffPoly p = random_homogeneous(rng, m, rng.uniform(0, degmax / 2));
                    const CliffPoly q = random_homogeneous(rng, m, rng.uniform(0, degmax / 2));
                    const CliffPoly r = random_homogeneous(rng, m, rng.uniform(0, degmax / 2));
                    if ((p * q) * r != p * (q * r)) return "poly mul not associative";
                    if (p * (q + r) != p * q + p * r) return "poly mul not distributive";
                }
                return "";
            }));
        out.push_back(check_case(
            "core.vector_mul_square", param_str({{"m", m}}), [m, seed, degmax]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 14));
                for (int i = 0; i < 3; ++i) {
                    const CliffPoly p = random_homogeneous(rng, m, rng.uniform(0, degmax / 2));
                    const CliffPoly lhs = vector_mul(Side::Left, vector_mul(Side::Left, p));
                    CliffPoly norm(m, p.role());
                    for (int j = 1; j <= m; ++j) {
                        Monomial mono = Monomial::unit(m);
                        mono.exps[j - 1] = 2;
                        norm.add_term(mono, MultiVector::scalar(m, CRational(-1)));
                    }
                    if (lhs != norm * p) return "x(xp) != -|x|^2 p";
                }
                return "";
            }));
        out.push_back(check_case(
            "core.evaluate_homomorphism", param_str({{"m", m}}), [m, seed, degmax]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 15));
                for (int i = 0; i < 4; ++i) {
                    const CliffPoly p = random_homogeneous(rng, m, rng.uniform(0, degmax / 2));
                    const CliffPoly q = random_homogeneous(rng, m, rng.uniform(0, degmax / 2));
                    std::vector<CRational> pt;
                    for (int j = 0; j < m; ++j) pt.push_back(rng.small_crational());
                    if ((p * q).evaluate(pt) != p.evaluate(pt) * q.evaluate(pt))
                        return "evaluate is not multiplicative";
                }
                return "";
            }));
        out.push_back(check_case(
            "core.homogeneous_components", param_str({{"m", m}}), [m, seed, degmax]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 16));
                CliffPoly p(m, VarRole::X);
                for (int d = 0; d <= degmax; ++d)
                    if (rng.coin()) p += random_homogeneous(rng, m, d);
                CliffPoly sum(m, VarRole::X);
                for (int d = 0; d <= p.total_degree(); ++d) sum += p.homogeneous_component(d);
                if (sum != p) return "components do not resum";
                return "";
            }));
        out.push_back(eq_case("core.left_right_mul_differ", param_str({{"m", m}}), [m]() {
            const CliffPoly p = CliffPoly::variable(m, VarRole::X, 1)
                                    .mul_left(MultiVector::generator(m, 1));
            const MultiVector b = MultiVector::generator(m, 1) * MultiVector::generator(m, 2);
            const bool differ = p.mul_left(b) != p.mul_right(b);
            return std::make_pair(std::string(differ ? "left != right" : "left == right"),
                                  std::string("left != right"));
        }));
        out.push_back(check_case("core.euler_degree", param_str({{"m", m}}), [m]() -> std::string {
            const CliffPoly x1 = CliffPoly::variable(m, VarRole::X, 1);
            const CliffPoly x2 = CliffPoly::variable(m, VarRole::X, 2);
            if (euler_degree(x1 * x2) != 2) return "deg(x1 x2) != 2";
            const CliffPoly one = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
            if (euler_degree(one + x1)) return "1 + x1 reported homogeneous";
            const auto frames = orthonormal_frames(m, 1);
            if (euler_degree(plane_wave(frames[0].first, frames[0].second, 3)) != 3)
                return "plane wave degree wrong";
            return "";
        }));
    }
    return out;
}

std::vector<CaseFn> cases_calculus_core(const std::vector<int>& ms, std::uint64_t seed) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        out.push_back(check_case(
            "core.dirac_laplacian", param_str({{"m", m}}), [m, seed]() -> std::string {
                Rng rng(seed ^ (static_cast<std::uint64_t>(m) << 17));
                for (int i = 0; i < 4; ++i) {
                    CliffPoly p(m, VarRole::X);
                    for (int d = 0; d <= 4; ++d)
                        if (rng.coin()) p += random_homogeneous(rng, m, d);
                    if (dirac_left(dirac_left(p)) != -laplacian(p))
                        return "dirac^2 != -laplacian";
                }
                return "";
            }));
        out.push_back(check_case("core.monogenic_kernel", param_str({{"m", m}}),
                                 [m]() -> std::string {
                                     const auto frames = orthonormal_frames(m, 2);
                                     for (const auto& [t, s] : frames)
                                         for (int k = 0; k <= 4; ++k) {
                                             const CliffPoly P = plane_wave(t, s, k);
                                             if (!dirac_left(P).is_zero())
                                                 return "plane wave not monogenic";
                                             if (!laplacian(P).is_zero())
                                                 return "plane wave not harmonic";
                                         }
                                     return "";
                                 }));
        out.push_back(check_case(
            "core.weighted_dirac", param_str({{"m", m}}), [m]() -> std::string {
                // d(1 e^{-|x|^2/2}) = -x e^{-|x|^2/2}
                const CliffPoly one = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
                const GaussianSection g(one, Rational(1, 2));
                if (weighted_dirac(g).poly != -CliffPoly::vector_variable(m, VarRole::X))
                    return "weighted dirac of the bare Gaussian is not -x";
                // twice on P_k e^{-|x|^2/2}: ((2k+m) - |x|^2) P_k
                const auto frames = orthonormal_frames(m, 1);
                for (int k = 0; k <= 3; ++k) {
                    const CliffPoly P = plane_wave(frames[0].first, frames[0].second, k);
                    const GaussianSection twice =
                        weighted_dirac(weighted_dirac(GaussianSection(P, Rational(1, 2))));
                    CliffPoly expect = P.scaled(Rational(2 * k + m));
                    CliffPoly norm(m, VarRole::X);
                    for (int j = 1; j <= m; ++j) {
                        Monomial mono = Monomial::unit(m);
                        mono.exps[j - 1] = 2;
                        norm.add_term(mono, MultiVector::scalar(m, CRational(1)));
                    }
                    expect -= norm * P;
                    if (twice.poly != expect) return "double weighted dirac mismatch";
                    if (twice.weight_c != Rational(1, 2)) return "weight changed";
                }
                return "";
            }));
    }
    return out;
}

std::vector<CaseFn> cases_hermite_master(const std::vector<int>& ms, int smax, int kmax) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for (int k = 0; k <= kmax; ++k) {
            for (int s = 0; s <= smax; ++s) {
                out.push_back(eq_case(
                    "hermite.defining_relation", param_str({{"m", m}, {"s", s}, {"k", k}}),
                    [m, s, k]() {
                        const auto frames = orthonormal_frames(m, 1);
                        const CliffPoly P = plane_wave(frames[0].first, frames[0].second, k);
                        GaussianSection g(P, Rational(1, 2));
                        for (int i = 0; i < s; ++i) g = weighted_dirac(g);
                        const CliffPoly lhs = g.poly.scaled(Rational(s % 2 == 0 ? 1 : -1));
                        const CliffPoly rhs = hermite_expand(clifford_hermite(s, k, m), P);
                        return std::make_pair(lhs, rhs);
                    }));
            }
        }
    }
    return out;
}

std::vector<CaseFn> cases_scalar_hermite_closed_form(int kmax) {
    std::vector<CaseFn> out;
    for (int k = 0; k <= kmax; ++k) {
        out.push_back(eq_case("hermite.closed_form", param_str({{"k", k}}), [k]() {
            // He_k(x) = k! sum_j (-1)^j x^{k-2j} / (j! (k-2j)! 2^j)
            ScalarPoly expect;
            for (int j = 0; 2 * j <= k; ++j) {
                Rational c = factorial(k) /
                             (factorial(j) * factorial(k - 2 * j) * pow(Rational(2), j));
                if (j % 2 != 0) c = -c;
                expect += ScalarPoly::monomial(k - 2 * j, c);
            }
            return std::make_pair(scalar_hermite(k), expect);
        }));
    }
    out.push_back(check_case("hermite.parity", "s<=6", []() -> std::string {
        for (int s = 0; s <= 6; ++s)
            for (int k = 0; k <= 3; ++k) {
                const HermiteCoeffs h = clifford_hermite(s, k, 3);
                if (h.coeffs.back() != Rational(1)) return "top coefficient is not 1";
                for (std::size_t j = 0; j < h.coeffs.size(); ++j)
                    if ((static_cast<int>(j) - s) % 2 != 0 && !h.coeffs[j].is_zero())
                        return "parity violation in H_{s,k}";
            }
        return "";
    }));
    return out;
}

std::vector<CaseFn> cases_multi_hermite_oracle(const std::vector<int>& ms, int total_max) {
    std::vector<CaseFn> out;
    for (int m : ms) {
        for_each_tuple(m, total_max, [&](const std::vector<int>& ks) {
            std::ostringstream ps;
            ps << "m=" << m << " k=(";
            for (std::size_t i = 0; i < ks.size(); ++i) ps << (i ? "," : "") << ks[i];
            ps << ")";
            out.push_back(eq_case("hermite.multi_vs_gaussian_derivative", ps.str(), [m, ks]() {
                // oracle: (-1)^{sum k} d^alpha e^{-|x|^2/2} tracked as Q e^{-|x|^2/2}
                CliffPoly q = CliffPoly::scalar_constant(m, VarRole::X, CRational(1));
                for (int j = 1; j <= m; ++j)
                    for (int rep = 0; rep < ks[j - 1]; ++rep)
                        q = CliffPoly::variable(m, VarRole::X, j) * q - q.derivative(j);
                return std::make_pair(multi_hermite(ks), q);
            }));
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// suites

std::vector<CaseFn> build_core(const VerifyOptions& o) {
    std::vector<CaseFn> out;
    append(out, cases_clifford_core(o.ms, o.seed));
    append(out, cases_polynomial_core(o.ms, o.seed, std::min(o.max_degree, 6)));
    append(out, cases_calculus_core(o.ms, o.seed));
    append(out, cases_fischer_roundtrip(o.ms, std::min(o.max_degree, 5), 2, o.seed));
    append(out, cases_beta(o.ms, 6, std::min(o.max_degree, 4)));
    return out;
}

std::vector<CaseFn> build_hermite(const VerifyOptions& o) {
    std::vector<CaseFn> out;
    append(out, cases_scalar_hermite_closed_form(std::max(o.max_degree, 8)));
    append(out, cases_hermite_master(o.ms, 4, 3));
    append(out, cases_multi_hermite_oracle(o.ms, std::min(o.max_degree, 4)));
    append(out, cases_orthogonality_1d(std::min(o.max_degree, 6)));
    append(out, cases_multi_index(o.ms, std::min(o.max_degree, 4)));
    return out;
}

std::vector<CaseFn> build_bargmann(const VerifyOptions& o) {
    std::vector<CaseFn> out;
    append(out, cases_transform_1d(std::max(o.max_degree, 8)));
    append(out, cases_axis_plane_waves(o.ms, std::min(o.max_degree, 5)));
    append(out, cases_transform_factorization(o.ms, 3, 3, o.seed));
    append(out, cases_hermite_section_transform(o.ms, 3, 3, o.seed));
    append(out, cases_heat_vs_moment(o.ms, std::min(o.max_degree, 5), 5, o.seed));
    append(out, cases_isometry(o.ms, 4, o.seed));
    append(out, cases_summand_orthogonality(o.ms, std::min(o.max_degree, 4), o.seed));
    append(out, cases_gaussian_fischer(o.ms, std::min(o.max_degree, 4), 10, o.seed));
    append(out, cases_monogenic_reproduction(o.ms, std::min(o.max_degree, 4), o.seed));
    return out;
}

std::vector<CaseFn> build_kernels(const VerifyOptions& o) {
    std::vector<CaseFn> out;
    const int kz = std::min(o.kernel_K, 5);
    std::vector<int> ms_full;
    bool has_m2 = false;
    for (int m : o.ms) {
        if (m == 2)
            has_m2 = true;
        else
            ms_full.push_back(m);
    }
    append(out, cases_zonal_routes(ms_full, kz, has_m2));
    append(out, cases_table_integrity(o.ms, kz));
    append(out, cases_reproducing(o.ms, std::min(4, kz), kz, o.seed));
    append(out, cases_bs_kernel_routes(o.ms, 3, o.kernel_K));
    append(out, cases_weierstrass(o.ms, 3, o.kernel_K, o.seed));
    append(out, cases_span_membership(o.ms, 3, o.seed));
    return out;
}

} // namespace

VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<CaseFn> jobs;
    if (suite == "core")
        jobs = build_core(opts);
    else if (suite == "hermite")
        jobs = build_hermite(opts);
    else if (suite == "bargmann")
        jobs = build_bargmann(opts);
    else if (suite == "kernels")
        jobs = build_kernels(opts);
    else if (suite == "all") {
        append(jobs, build_core(opts));
        append(jobs, build_hermite(opts));
        append(jobs, build_bargmann(opts));
        append(jobs, build_kernels(opts));
    } else {
        throw std::invalid_argument("unknown suite '" + suite +
                                    "' (expected core|hermite|bargmann|kernels|all)");
    }
    VerifyReport report;
    report.suite = suite;
    report.cases = run_cases(jobs);
    return report;
}

namespace {

const char* kCriterionTitles[] = {
    "A1  1D transform B[psi_k] = z^k, k <= 8",
    "A2  1D orthogonality <psi_l, psi_k> = delta k!, l,k <= 6",
    "A3  multi-index transform and norms, m in {2,3}, sum k <= 5",
    "A4  B[(x1 - e1e2 x2)^k e^{-|x|^2/4}] = (z1 - e1e2 z2)^k, k <= 5",
    "A5  B[psi_{s,k} P_k] factors as z^s B[P_k e^{-|x|^2/4}], s <= 3, k <= 3",
    "A6  B[H_{s,k} e^{-|x|^2/4} P_k] = z^s P_k(z), plane waves and projections",
    "A7  Fischer round-trip, monogenic parts, uniqueness, m in {2,3,4}",
    "A8  beta validation d(x^s P_k) = beta_{s,k} x^{s-1} P_k, s <= 6, k <= 4",
    "A9  zonal route agreement (fischer/recursion/gegenbauer), k <= 5",
    "A10 reproducing property of Z_k and truncated E, k <= 4, m in {2,3}",
    "A11 isometry on basis sections + Bargmann-orthogonal Fischer summands",
    "A12 harmonic Fischer-Gaussian and complex Bargmann-Fischer identities",
    "A13 B_s kernel assembly vs projected series; Weierstrass reproduction",
    "A14 monogenic part of B[g e^{-|x|^2/4}] returns g(z) for monogenic g",
};

} // namespace

int acceptance_criteria_count() { return 14; }

std::string acceptance_criterion_title(int index) {
    if (index < 1 || index > acceptance_criteria_count())
        throw std::invalid_argument("criterion index out of range");
    return kCriterionTitles[index - 1];
}

VerifyReport run_acceptance_criterion(int index, std::uint64_t seed) {
    std::vector<CaseFn> jobs;
    switch (index) {
        case 1: jobs = cases_transform_1d(8); break;
        case 2: jobs = cases_orthogonality_1d(6); break;
        case 3: jobs = cases_multi_index({2, 3}, 5); break;
        case 4: jobs = cases_axis_plane_waves({2, 3}, 5); break;
        case 5: jobs = cases_transform_factorization({2, 3}, 3, 3, seed); break;
        case 6: jobs = cases_hermite_section_transform({2, 3}, 3, 3, seed); break;
        case 7: jobs = cases_fischer_roundtrip({2, 3, 4}, 5, 3, seed); break;
        case 8: jobs = cases_beta({2, 3}, 6, 4); break;
        case 9: jobs = cases_zonal_routes({3, 4}, 5, true); break;
        case 10: jobs = cases_reproducing({2, 3}, 4, 5, seed); break;
        case 11: {
            jobs = cases_isometry({2, 3}, 4, seed);
            append(jobs, cases_summand_orthogonality({2, 3}, 4, seed));
            break;
        }
        case 12: jobs = cases_gaussian_fischer({2, 3}, 4, 10, seed); break;
        case 13: {
            jobs = cases_bs_kernel_routes({2, 3}, 3, 6);
            append(jobs, cases_weierstrass({2, 3}, 3, 6, seed));
            break;
        }
        case 14: jobs = cases_monogenic_reproduction({2, 3}, 4, seed); break;
        default: throw std::invalid_argument("criterion index out of range");
    }
    VerifyReport report;
    report.suite = "A" + std::to_string(index);
    report.cases = run_cases(jobs);
    return report;
}

} // namespace monoclif
