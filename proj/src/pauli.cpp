// Copyright 2026 The clinr-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clinr/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace clinr {

namespace {

inline uint64_t bit_mask(size_t q) { return uint64_t{1} << (q & 63); }

/// GF(2) row-reduction workspace: each row holds `width` data bits followed
/// by a tag recording which inputs were combined into it.
struct Gf2Rows {
    size_t width;
    size_t data_words;
    size_t tag_words;
    std::vector<std::vector<uint64_t>> rows;

    Gf2Rows(size_t width_bits, size_t num_tags)
        : width(width_bits), data_words(words_for_bits(width_bits)), tag_words(words_for_bits(num_tags)) {}

    static bool get(const std::vector<uint64_t>& r, size_t k) { return (r[k >> 6] >> (k & 63)) & 1; }
    static void flip(std::vector<uint64_t>& r, size_t k) { r[k >> 6] ^= bit_mask(k); }

    void add_row(const std::vector<uint64_t>& data, size_t tag) {
        std::vector<uint64_t> r(data_words + tag_words, 0);
        for (size_t w = 0; w < data_words; w++) r[w] = data[w];
        flip(r, data_words * 64 + tag);
        rows.push_back(std::move(r));
    }

    /// Reduces to row echelon form; returns pivot column per pivot row.
    std::vector<size_t> echelon() {
        std::vector<size_t> pivots;
        size_t rank = 0;
        for (size_t col = 0; col < width && rank < rows.size(); col++) {
            size_t pivot = rank;
            while (pivot < rows.size() && !get(rows[pivot], col)) pivot++;
            if (pivot == rows.size()) continue;
            std::swap(rows[rank], rows[pivot]);
            for (size_t r = 0; r < rows.size(); r++) {
                if (r != rank && get(rows[r], col)) {
                    for (size_t w = 0; w < rows[r].size(); w++) rows[r][w] ^= rows[rank][w];
                }
            }
            pivots.push_back(col);
            rank++;
        }
        return pivots;
    }
};

std::vector<uint64_t> symplectic_bits(const PauliString& p) {
    size_t n = p.num_qubits();
    std::vector<uint64_t> out(words_for_bits(2 * n), 0);
    for (size_t q = 0; q < n; q++) {
        if (p.x(q)) out[q >> 6] |= bit_mask(q);
        if (p.z(q)) out[(n + q) >> 6] |= bit_mask(n + q);
    }
    return out;
}

}  // namespace

PauliString::PauliString(size_t num_qubits)
    : n_(num_qubits), x_(words_for_bits(num_qubits), 0), z_(words_for_bits(num_qubits), 0) {}

void PauliString::check_index(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n_) +
                                "-qubit Pauli string");
    }
}

PauliString PauliString::from_str(std::string_view text) {
    size_t k = 0;
    uint8_t phase = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        if (text[k] == '-') phase = 2;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase = (phase + 1) & 3;
        k++;
    }
    PauliString p(text.size() - k);
    for (size_t q = 0; k < text.size(); k++, q++) {
        char c = text[k];
        if (c == '_') c = 'I';
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("bad Pauli character '" + std::string(1, text[k]) + "' in \"" +
                                        std::string(text) + "\"");
        }
        p.set_letter(q, c);
    }
    p.phase_ = phase;
    return p;
}

PauliString PauliString::from_sparse(std::string_view text, size_t num_qubits, size_t offset) {
    PauliString p(num_qubits);
    std::istringstream in{std::string(text)};
    std::string token;
    uint8_t phase = 0;
    bool any = false;
    while (in >> token) {
        size_t k = 0;
        if (token[k] == '+' || token[k] == '-') {
            if (token[k] == '-') phase = (phase + 2) & 3;
            k++;
            if (k < token.size() && token[k] == 'i') {
                phase = (phase + 1) & 3;
                k++;
            }
            if (k == token.size()) continue;
        }
        char c = token[k++];
        if (c != 'X' && c != 'Y' && c != 'Z' && c != 'I') {
            throw std::invalid_argument("bad sparse Pauli token \"" + token + "\"");
        }
        if (k < token.size() && token[k] == '_') k++;
        bool braced = k < token.size() && token[k] == '{';
        if (braced) k++;
        size_t start = k;
        while (k < token.size() && std::isdigit(static_cast<unsigned char>(token[k]))) k++;
        if (k == start) throw std::invalid_argument("missing qubit index in token \"" + token + "\"");
        size_t index = std::stoul(token.substr(start, k - start));
        if (braced) {
            if (k >= token.size() || token[k] != '}') {
                throw std::invalid_argument("unterminated brace in token \"" + token + "\"");
            }
            k++;
        }
        if (k != token.size()) throw std::invalid_argument("trailing characters in token \"" + token + "\"");
        if (index < offset || index - offset >= num_qubits) {
            throw std::out_of_range("qubit " + std::to_string(index) + " outside register [" +
                                    std::to_string(offset) + ", " + std::to_string(offset + num_qubits) + ")");
        }
        if (p.letter(index - offset) != 'I') {
            throw std::invalid_argument("qubit " + std::to_string(index) + " repeated in \"" + std::string(text) +
                                        "\"");
        }
        p.set_letter(index - offset, c);
        any = true;
    }
    if (!any && text.find_first_not_of(" \t\n+-") != std::string_view::npos) {
        throw std::invalid_argument("empty sparse Pauli \"" + std::string(text) + "\"");
    }
    p.phase_ = phase;
    return p;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char letter) {
    PauliString p(num_qubits);
    p.set_letter(q, letter);
    return p;
}

std::string PauliString::str() const {
    static constexpr const char* kSigns[] = {"+", "+i", "-", "-i"};
    std::string out = kSigns[phase_];
    out.reserve(out.size() + n_);
    for (size_t q = 0; q < n_; q++) out.push_back(letter(q));
    return out;
}

std::string PauliString::sparse_str(size_t offset) const {
    std::string out;
    if (phase_ == 2) out = "-";
    if (phase_ == 1) out = "+i";
    if (phase_ == 3) out = "-i";
    for (size_t q = 0; q < n_; q++) {
        char c = letter(q);
        if (c == 'I') continue;
        if (!out.empty() && out.back() != '-' && out.back() != 'i') out.push_back(' ');
        out.push_back(c);
        out += std::to_string(q + offset);
    }
    if (out.empty()) out = "I";
    return out;
}

int PauliString::sign() const {
    if (phase_ & 1) throw std::domain_error("Pauli string " + str() + " is not Hermitian");
    return phase_ == 0 ? 1 : -1;
}

void PauliString::set(size_t q, bool x_bit, bool z_bit) {
    check_index(q);
    uint64_t m = bit_mask(q);
    x_[q >> 6] = x_bit ? (x_[q >> 6] | m) : (x_[q >> 6] & ~m);
    z_[q >> 6] = z_bit ? (z_[q >> 6] | m) : (z_[q >> 6] & ~m);
}

char PauliString::letter(size_t q) const {
    check_index(q);
    static constexpr char kLetters[] = {'I', 'X', 'Z', 'Y'};
    return kLetters[x(q) | (z(q) << 1)];
}

void PauliString::set_letter(size_t q, char c) {
    switch (c) {
        case 'I': set(q, false, false); break;
        case 'X': set(q, true, false); break;
        case 'Y': set(q, true, true); break;
        case 'Z': set(q, false, true); break;
        default: throw std::invalid_argument("bad Pauli letter '" + std::string(1, c) + "'");
    }
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < x_.size(); k++) w += std::popcount(x_[k] | z_[k]);
    return w;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < n_; q++) {
        if (x(q) || z(q)) out.push_back(q);
    }
    return out;
}

bool PauliString::is_identity() const {
    for (size_t k = 0; k < x_.size(); k++) {
        if (x_[k] | z_[k]) return false;
    }
    return true;
}

bool PauliString::same_letters(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
    if (rhs.n_ != n_) {
        throw std::invalid_argument("Pauli length mismatch: " + std::to_string(n_) + " vs " +
                                    std::to_string(rhs.n_));
    }
    int log_i = phase_ + rhs.phase_;
    for (size_t k = 0; k < x_.size(); k++) {
        uint64_t x1 = x_[k], z1 = z_[k], x2 = rhs.x_[k], z2 = rhs.z_[k];
        // XY = iZ, YZ = iX, ZX = iY and their reverses pick up -i.
        uint64_t plus = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t minus = (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2);
        log_i += std::popcount(plus) - std::popcount(minus);
        x_[k] = x1 ^ x2;
        z_[k] = z1 ^ z2;
    }
    phase_ = static_cast<uint8_t>(((log_i % 4) + 4) % 4);
    return *this;
}

PauliString PauliString::inverse() const {
    PauliString out = *this;
    out.phase_ = (4 - phase_) & 3;
    return out;
}

bool PauliString::commutes(const PauliString& other) const {
    if (other.n_ != n_) {
        throw std::invalid_argument("Pauli length mismatch: " + std::to_string(n_) + " vs " +
                                    std::to_string(other.n_));
    }
    int anti = 0;
    for (size_t k = 0; k < x_.size(); k++) {
        anti += std::popcount((x_[k] & other.z_[k]) ^ (z_[k] & other.x_[k]));
    }
    return (anti & 1) == 0;
}

void PauliString::apply_h(size_t q) {
    bool xb = x(q), zb = z(q);
    if (xb && zb) phase_ ^= 2;
    set(q, zb, xb);
}

void PauliString::apply_s(size_t q) {
    bool xb = x(q), zb = z(q);
    if (xb && zb) phase_ ^= 2;
    set(q, xb, zb ^ xb);
}

void PauliString::apply_s_dag(size_t q) {
    bool xb = x(q), zb = z(q);
    if (xb && !zb) phase_ ^= 2;
    set(q, xb, zb ^ xb);
}

void PauliString::apply_x(size_t q) {
    if (z(q)) phase_ ^= 2;
}

void PauliString::apply_y(size_t q) {
    if (x(q) != z(q)) phase_ ^= 2;
}

void PauliString::apply_z(size_t q) {
    if (x(q)) phase_ ^= 2;
}

void PauliString::apply_cx(size_t c, size_t t) {
    if (c == t) throw std::invalid_argument("CX control equals target");
    bool xc = x(c), zc = z(c), xt = x(t), zt = z(t);
    if (xc && zt && (xt == zc)) phase_ ^= 2;
    set(t, xt ^ xc, zt);
    set(c, xc, zc ^ zt);
}

void PauliString::apply_cz(size_t a, size_t b) {
    if (a == b) throw std::invalid_argument("CZ on a single qubit");
    bool xa = x(a), za = z(a), xb = x(b), zb = z(b);
    if (xa && xb && (za != zb)) phase_ ^= 2;
    set(a, xa, za ^ xb);
    set(b, xb, zb ^ xa);
}

PauliString PauliString::tensor(const PauliString& other) const {
    PauliString out(n_ + other.n_);
    for (size_t q = 0; q < n_; q++) out.set(q, x(q), z(q));
    for (size_t q = 0; q < other.n_; q++) out.set(n_ + q, other.x(q), other.z(q));
    out.phase_ = (phase_ + other.phase_) & 3;
    return out;
}

PauliString PauliString::embedded(size_t num_qubits, size_t offset) const {
    if (offset + n_ > num_qubits) throw std::out_of_range("embedding exceeds register");
    PauliString out(num_qubits);
    for (size_t q = 0; q < n_; q++) out.set(offset + q, x(q), z(q));
    out.phase_ = phase_;
    return out;
}

PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
}

PauliString multiply(const PauliString& p, const PauliString& q) { return p * q; }

bool commutes(const PauliString& p, const PauliString& q) { return p.commutes(q); }

std::optional<std::vector<bool>> express_in_basis(std::span<const PauliString> basis, const PauliString& target) {
    size_t n = target.num_qubits();
    Gf2Rows rows(2 * n, basis.size() + 1);
    for (size_t k = 0; k < basis.size(); k++) {
        if (basis[k].num_qubits() != n) throw std::invalid_argument("basis length mismatch");
        rows.add_row(symplectic_bits(basis[k]), k);
    }
    auto pivots = rows.echelon();
    std::vector<uint64_t> residual(rows.data_words + rows.tag_words, 0);
    auto t = symplectic_bits(target);
    for (size_t w = 0; w < rows.data_words; w++) residual[w] = t[w];
    for (size_t r = 0; r < pivots.size(); r++) {
        if (Gf2Rows::get(residual, pivots[r])) {
            for (size_t w = 0; w < residual.size(); w++) residual[w] ^= rows.rows[r][w];
        }
    }
    for (size_t w = 0; w < rows.data_words; w++) {
        if (residual[w]) return std::nullopt;
    }
    std::vector<bool> selection(basis.size());
    for (size_t k = 0; k < basis.size(); k++) selection[k] = Gf2Rows::get(residual, rows.data_words * 64 + k);
    return selection;
}

PauliString product_of(std::span<const PauliString> basis, const std::vector<bool>& selection) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    PauliString out(basis[0].num_qubits());
    for (size_t k = 0; k < basis.size(); k++) {
        if (selection[k]) out *= basis[k];
    }
    return out;
}

PauliString pauli_with_commutation(std::span<const PauliString> generators, const std::vector<bool>& anticommute) {
    if (generators.empty()) throw std::invalid_argument("no generators");
    size_t n = generators[0].num_qubits();
    // Unknowns (f_x | f_z); the symplectic product with g is f_x.g_z + f_z.g_x.
    Gf2Rows rows(2 * n + 1, generators.size());
    for (size_t k = 0; k < generators.size(); k++) {
        std::vector<uint64_t> data(words_for_bits(2 * n + 1), 0);
        for (size_t q = 0; q < n; q++) {
            if (generators[k].z(q)) data[q >> 6] |= bit_mask(q);
            if (generators[k].x(q)) data[(n + q) >> 6] |= bit_mask(n + q);
        }
        if (anticommute[k]) data[(2 * n) >> 6] |= bit_mask(2 * n);
        rows.add_row(data, k);
    }
    auto pivots = rows.echelon();
    PauliString out(n);
    for (size_t r = 0; r < pivots.size(); r++) {
        if (pivots[r] == 2 * n) throw std::invalid_argument("generators are not independent");
        if (Gf2Rows::get(rows.rows[r], 2 * n)) {
            size_t col = pivots[r];
            if (col < n) {
                out.set(col, true, out.z(col));
            } else {
                out.set(col - n, out.x(col - n), true);
            }
        }
    }
    return out;
}

CliffordMap::CliffordMap(size_t num_qubits) {
    for (size_t q = 0; q < num_qubits; q++) {
        x_img_.push_back(PauliString::single(num_qubits, q, 'X'));
        z_img_.push_back(PauliString::single(num_qubits, q, 'Z'));
    }
}

CliffordMap::CliffordMap(std::vector<PauliString> x_images, std::vector<PauliString> z_images)
    : x_img_(std::move(x_images)), z_img_(std::move(z_images)) {
    if (x_img_.size() != z_img_.size()) throw std::invalid_argument("image count mismatch");
    if (!is_valid()) throw std::invalid_argument("images do not define a Clifford map");
}

PauliString CliffordMap::conjugate(const PauliString& p, Direction direction) const {
    if (p.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Clifford map acts on " + std::to_string(num_qubits()) +
                                    " qubits, Pauli string has " + std::to_string(p.num_qubits()));
    }
    if (direction == Direction::Inverse) return inverse().conjugate(p, Direction::Forward);
    size_t n = num_qubits();
    PauliString out(n);
    int log_i = p.phase();
    for (size_t q = 0; q < n; q++) {
        bool xb = p.x(q), zb = p.z(q);
        if (xb) out *= x_img_[q];
        if (zb) out *= z_img_[q];
        if (xb && zb) log_i += 1;  // Y = i X Z
    }
    out.set_phase(static_cast<uint8_t>(out.phase() + log_i));
    return out;
}

CliffordMap CliffordMap::inverse() const {
    size_t n = num_qubits();
    std::vector<PauliString> images;
    images.reserve(2 * n);
    images.insert(images.end(), x_img_.begin(), x_img_.end());
    images.insert(images.end(), z_img_.begin(), z_img_.end());
    std::vector<PauliString> gens;
    for (size_t q = 0; q < n; q++) gens.push_back(PauliString::single(n, q, 'X'));
    for (size_t q = 0; q < n; q++) gens.push_back(PauliString::single(n, q, 'Z'));

    auto preimage = [&](const PauliString& g) {
        auto sel = express_in_basis(images, g);
        if (!sel) throw std::logic_error("Clifford map is not invertible");
        PauliString image = product_of(images, *sel);
        PauliString pre = product_of(gens, *sel);
        // C pre C^dag = image = i^(image.phase) g  =>  C^dag g C = i^-(image.phase) pre.
        pre.set_phase(static_cast<uint8_t>(pre.phase() + 4 - image.phase()));
        return pre;
    };

    std::vector<PauliString> xs, zs;
    for (size_t q = 0; q < n; q++) xs.push_back(preimage(gens[q]));
    for (size_t q = 0; q < n; q++) zs.push_back(preimage(gens[n + q]));
    CliffordMap out;
    out.x_img_ = std::move(xs);
    out.z_img_ = std::move(zs);
    return out;
}

CliffordMap CliffordMap::then(const CliffordMap& after) const {
    if (after.num_qubits() != num_qubits()) throw std::invalid_argument("Clifford size mismatch");
    CliffordMap out;
    for (const auto& p : x_img_) out.x_img_.push_back(after.conjugate(p));
    for (const auto& p : z_img_) out.z_img_.push_back(after.conjugate(p));
    return out;
}

bool CliffordMap::is_valid() const {
    size_t n = num_qubits();
    for (size_t i = 0; i < n; i++) {
        if ((x_img_[i].phase() & 1) || (z_img_[i].phase() & 1)) return false;
        if (x_img_[i].num_qubits() != n || z_img_[i].num_qubits() != n) return false;
        for (size_t j = 0; j < n; j++) {
            if (!x_img_[i].commutes(x_img_[j])) return false;
            if (!z_img_[i].commutes(z_img_[j])) return false;
            if (x_img_[i].commutes(z_img_[j]) == (i == j)) return false;
        }
    }
    return true;
}

void CliffordMap::apply_h(size_t q) { for_each_image([&](PauliString& p) { p.apply_h(q); }); }
void CliffordMap::apply_s(size_t q) { for_each_image([&](PauliString& p) { p.apply_s(q); }); }
void CliffordMap::apply_s_dag(size_t q) { for_each_image([&](PauliString& p) { p.apply_s_dag(q); }); }
void CliffordMap::apply_x(size_t q) { for_each_image([&](PauliString& p) { p.apply_x(q); }); }
void CliffordMap::apply_y(size_t q) { for_each_image([&](PauliString& p) { p.apply_y(q); }); }
void CliffordMap::apply_z(size_t q) { for_each_image([&](PauliString& p) { p.apply_z(q); }); }
void CliffordMap::apply_cx(size_t c, size_t t) { for_each_image([&](PauliString& p) { p.apply_cx(c, t); }); }
void CliffordMap::apply_cz(size_t a, size_t b) { for_each_image([&](PauliString& p) { p.apply_cz(a, b); }); }

}  // namespace clinr
