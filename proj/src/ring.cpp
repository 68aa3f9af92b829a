
// Copyright 2026-present the idealcat project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "idealcat/ring.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>

namespace idealcat {

FiniteRing::FiniteRing(std::string label,
                       const std::vector<std::vector<int>>& add_table,
                       const std::vector<std::vector<int>>& mul_table,
                       int one)
    : label_(std::move(label)), order_(static_cast<int>(add_table.size())), one_(one) {
    if (order_ < 1) {
        throw InvalidSpec("ring must have at least one element");
    }
    if (order_ > kMaxRingOrder) {
        throw SizeExceeded("ring order " + std::to_string(order_) + " exceeds cap " +
                           std::to_string(kMaxRingOrder));
    }
    if (mul_table.size() != add_table.size()) {
        throw InvalidSpec("add and mul tables have different sizes");
    }
    auto flatten = [&](const std::vector<std::vector<int>>& table, const char* name) {
        std::vector<int> flat;
        flat.reserve(static_cast<size_t>(order_) * order_);
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != order_) {
                throw InvalidSpec(std::string(name) + " table is not square");
            }
            for (int v : row) {
                if (v < 0 || v >= order_) {
                    throw InvalidSpec(std::string(name) + " table entry out of range");
                }
                flat.push_back(v);
            }
        }
        return flat;
    };
    add_ = flatten(add_table, "add");
    mul_ = flatten(mul_table, "mul");
    if (one_ < 0 || one_ >= order_) {
        throw InvalidSpec("multiplicative identity index out of range");
    }
    // Structural minimum for the element-0-is-zero convention and for
    // the neg table; the remaining axioms are verify_ring_axioms' job.
    for (int a = 0; a < order_; ++a) {
        if (add(0, a) != a || add(a, 0) != a) {
            throw InvalidSpec("element 0 is not an additive identity");
        }
    }
    neg_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (add(a, b) == 0 && add(b, a) == 0) {
                neg_[a] = b;
                break;
            }
        }
        if (neg_[a] < 0) {
            throw InvalidSpec("element " + std::to_string(a) + " has no additive inverse");
        }
    }
}

namespace {

bool
is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

FiniteRing
make_zmod(int n) {
    if (n < 1) {
        throw InvalidSpec("zmod modulus must be >= 1");
    }
    if (n > kMaxRingOrder) {
        throw SizeExceeded("zmod:" + std::to_string(n) + " exceeds order cap");
    }
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    }
    return FiniteRing("zmod:" + std::to_string(n), add, mul, n == 1 ? 0 : 1);
}

FiniteRing
make_prod(const FiniteRing& r1, const FiniteRing& r2) {
    const int64_t wide = static_cast<int64_t>(r1.order()) * r2.order();
    if (wide > kMaxRingOrder) {
        throw SizeExceeded("product ring order " + std::to_string(wide) + " exceeds cap");
    }
    const int n2 = r2.order();
    const int n = static_cast<int>(wide);
    // Pair (x1, x2) lives at index x1*n2 + x2: first factor major.
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int a1 = a / n2, a2 = a % n2;
            const int b1 = b / n2, b2 = b % n2;
            add[a][b] = r1.add(a1, b1) * n2 + r2.add(a2, b2);
            mul[a][b] = r1.mul(a1, b1) * n2 + r2.mul(a2, b2);
        }
    }
    const int one = r1.one() * n2 + r2.one();
    return FiniteRing("prod:" + r1.label() + "," + r2.label(), add, mul, one);
}

FiniteRing
make_mat(int k, int p) {
    if (k < 1) {
        throw InvalidSpec("matrix dimension must be >= 1");
    }
    if (!is_prime(p)) {
        throw InvalidSpec("matrix entries require a prime modulus, got " + std::to_string(p));
    }
    const int cells = k * k;
    int64_t order = 1;
    for (int i = 0; i < cells; ++i) {
        order *= p;
        if (order > kMaxRingOrder) {
            throw SizeExceeded("mat:" + std::to_string(k) + ":zmod:" + std::to_string(p) +
                               " exceeds order cap");
        }
    }
    const int n = static_cast<int>(order);
    // Index <-> matrix: row-major base-p digits, entry (0,0) most
    // significant, so the zero matrix is element 0.
    auto decode = [&](int e) {
        std::vector<int> m(cells);
        for (int i = cells - 1; i >= 0; --i) {
            m[i] = e % p;
            e /= p;
        }
        return m;
    };
    auto encode = [&](const std::vector<int>& m) {
        int e = 0;
        for (int i = 0; i < cells; ++i) {
            e = e * p + m[i];
        }
        return e;
    };
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        const std::vector<int> ma = decode(a);
        for (int b = 0; b < n; ++b) {
            const std::vector<int> mb = decode(b);
            std::vector<int> sum(cells), prod(cells, 0);
            for (int i = 0; i < cells; ++i) {
                sum[i] = (ma[i] + mb[i]) % p;
            }
            for (int r = 0; r < k; ++r) {
                for (int c = 0; c < k; ++c) {
                    int acc = 0;
                    for (int t = 0; t < k; ++t) {
                        acc = (acc + ma[r * k + t] * mb[t * k + c]) % p;
                    }
                    prod[r * k + c] = acc;
                }
            }
            add[a][b] = encode(sum);
            mul[a][b] = encode(prod);
        }
    }
    std::vector<int> id(cells, 0);
    for (int r = 0; r < k; ++r) {
        id[r * k + r] = 1 % p;
    }
    return FiniteRing("mat:" + std::to_string(k) + ":zmod:" + std::to_string(p), add, mul,
                      encode(id));
}

// Recursive-descent parser for the spec grammar.  Each production
// consumes exactly its own text, which makes nested prod specs
// unambiguous without parentheses.
class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    FiniteRing
    parse_toplevel() {
        FiniteRing ring = parse_spec();
        if (pos_ != text_.size()) {
            throw ParseError("trailing characters after ring spec: '" + text_.substr(pos_) + "'");
        }
        return ring;
    }

private:
    FiniteRing
    parse_spec() {
        if (consume("zmod:")) {
            return make_zmod(parse_int());
        }
        if (consume("prod:")) {
            FiniteRing lhs = parse_spec();
            expect(",");
            FiniteRing rhs = parse_spec();
            return make_prod(lhs, rhs);
        }
        if (consume("mat:")) {
            const int k = parse_int();
            expect(":");
            if (!consume("zmod:")) {
                throw ParseError("matrix base ring must be zmod:<p>");
            }
            return make_mat(k, parse_int());
        }
        throw ParseError("expected zmod:, prod: or mat: at '" + text_.substr(pos_) + "'");
    }

    bool
    consume(const std::string& literal) {
        if (text_.compare(pos_, literal.size(), literal) == 0) {
            pos_ += literal.size();
            return true;
        }
        return false;
    }

    void
    expect(const std::string& literal) {
        if (!consume(literal)) {
            throw ParseError("expected '" + literal + "' at position " + std::to_string(pos_) +
                             " of '" + text_ + "'");
        }
    }

    int
    parse_int() {
        const size_t start = pos_;
        int64_t value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) {
                throw SizeExceeded("numeric parameter too large in '" + text_ + "'");
            }
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected a number at position " + std::to_string(start) + " of '" +
                             text_ + "'");
        }
        return static_cast<int>(value);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

}  // namespace

FiniteRing
parse_ring_spec(const std::string& text) {
    return SpecParser(text).parse_toplevel();
}

FiniteRing
opposite_ring(const FiniteRing& ring) {
    const int n = ring.order();
    std::vector<std::vector<int>> add(n, std::vector<int>(n));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            add[a][b] = ring.add(a, b);
            mul[a][b] = ring.mul(b, a);
        }
    }
    return FiniteRing("op(" + ring.label() + ")", add, mul, ring.one());
}

std::vector<int>
principal_left_ideal(const FiniteRing& ring, int a) {
    std::set<int> elems;
    for (int r = 0; r < ring.order(); ++r) {
        elems.insert(ring.mul(r, a));
    }
    return {elems.begin(), elems.end()};
}

std::vector<int>
principal_right_ideal(const FiniteRing& ring, int a) {
    std::set<int> elems;
    for (int r = 0; r < ring.order(); ++r) {
        elems.insert(ring.mul(a, r));
    }
    return {elems.begin(), elems.end()};
}

bool
green_l(const FiniteRing& ring, int a, int b) {
    return principal_left_ideal(ring, a) == principal_left_ideal(ring, b);
}

bool
green_r(const FiniteRing& ring, int a, int b) {
    return principal_right_ideal(ring, a) == principal_right_ideal(ring, b);
}

VerificationReport
verify_ring_axioms(const FiniteRing& ring) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "ring_axioms";
    const int n = ring.order();

    auto triple_witness = [](int x, int y, int z, int lhs, int rhs) {
        return Json{{"x", x}, {"y", y}, {"z", z}, {"lhs", lhs}, {"rhs", rhs}};
    };

    {
        bool ok = true;
        Json witness;
        for (int x = 0; x < n && ok; ++x) {
            for (int y = 0; y < n && ok; ++y) {
                for (int z = 0; z < n && ok; ++z) {
                    const int lhs = ring.add(ring.add(x, y), z);
                    const int rhs = ring.add(x, ring.add(y, z));
                    if (lhs != rhs) {
                        ok = false;
                        witness = triple_witness(x, y, z, lhs, rhs);
                    }
                }
            }
        }
        report.add("ring.add.associative", "(x+y)+z = x+(y+z)", ok, witness);
    }
    {
        bool ok = true;
        Json witness;
        for (int x = 0; x < n && ok; ++x) {
            for (int y = 0; y < n && ok; ++y) {
                if (ring.add(x, y) != ring.add(y, x)) {
                    ok = false;
                    witness = Json{{"x", x}, {"y", y}};
                }
            }
        }
        report.add("ring.add.commutative", "x+y = y+x", ok, witness);
    }
    {
        bool ok = true;
        Json witness;
        for (int x = 0; x < n && ok; ++x) {
            if (ring.add(0, x) != x || ring.add(x, 0) != x) {
                ok = false;
                witness = Json{{"x", x}};
            }
        }
        report.add("ring.add.zero_identity", "0+x = x+0 = x", ok, witness);
    }
    {
        bool ok = true;
        Json witness;
        for (int x = 0; x < n && ok; ++x) {
            if (ring.add(x, ring.neg(x)) != 0 || ring.add(ring.neg(x), x) != 0) {
                ok = false;
                witness = Json{{"x", x}};
            }
        }
        report.add("ring.add.inverses", "x + (-x) = 0", ok, witness);
    }
    {
        bool ok = true;
        Json witness;
        for (int x = 0; x < n && ok; ++x) {
            for (int y = 0; y < n && ok; ++y) {
                for (int z = 0; z < n && ok; ++z) {
                    const int lhs = ring.mul(ring.mul(x, y), z);
                    const int rhs = ring.mul(x, ring.mul(y, z));
                    if (lhs != rhs) {
                        ok = false;
                        witness = triple_witness(x, y, z, lhs, rhs);
                    }
                }
            }
        }
        report.add("ring.mul.associative", "(x*y)*z = x*(y*z)", ok, witness);
    }
    {
        bool ok = true;
        Json witness;
        const int e = ring.one();
        for (int x = 0; x < n && ok; ++x) {
            if (ring.mul(e, x) != x || ring.mul(x, e) != x) {
                ok = false;
                witness = Json{{"x", x}, {"one", e}};
            }
        }
        report.add("ring.mul.identity", "1*x = x*1 = x", ok, witness);
    }
    {
        bool ok = true;
        Json witness;
        for (int x = 0; x < n && ok; ++x) {
            for (int y = 0; y < n && ok; ++y) {
                for (int z = 0; z < n && ok; ++z) {
                    const int lhs = ring.mul(x, ring.add(y, z));
                    const int rhs = ring.add(ring.mul(x, y), ring.mul(x, z));
                    if (lhs != rhs) {
                        ok = false;
                        witness = triple_witness(x, y, z, lhs, rhs);
                    }
                }
            }
        }
        report.add("ring.distributive.left", "x*(y+z) = x*y + x*z", ok, witness);
    }
    {
        bool ok = true;
        Json witness;
        for (int x = 0; x < n && ok; ++x) {
            for (int y = 0; y < n && ok; ++y) {
                for (int z = 0; z < n && ok; ++z) {
                    const int lhs = ring.mul(ring.add(x, y), z);
                    const int rhs = ring.add(ring.mul(x, z), ring.mul(y, z));
                    if (lhs != rhs) {
                        ok = false;
                        witness = triple_witness(x, y, z, lhs, rhs);
                    }
                }
            }
        }
        report.add("ring.distributive.right", "(x+y)*z = x*z + y*z", ok, witness);
    }

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string
to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::kPass:
            return "pass";
        case CheckStatus::kFail:
            return "fail";
        case CheckStatus::kSkip:
            return "skip";
        case CheckStatus::kNote:
            return "note";
    }
    return "unknown";
}

}  // namespace idealcat
