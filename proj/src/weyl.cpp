#include "coxlab/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

std::uint64_t pack(const RootVector& v) {
  std::uint64_t key = 0;
  for (int i = 0; i < kMaxRank; ++i)
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(v[i] + 8) & 0xF) << (4 * i);
  return key;
}

int height(const RootVector& v) {
  int h = 0;
  for (auto c : v) h += c;
  return h;
}

// Inner products of simple roots, scaled so that every entry is an integer.
std::vector<std::vector<int>> gram_matrix(const CoxeterSpec& spec) {
  const int n = spec.rank;
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int value) { g[i][j] = g[j][i] = value; };
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
    case Family::C:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace

std::size_t ImagesHash::operator()(const Images& images) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : images) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

CoxeterSpec CoxeterSpec::parse(std::string_view text) {
  if (text.size() < 2) fail(ErrorKind::UnsupportedSpec, "cannot parse Coxeter type '" + std::string(text) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
    fail(ErrorKind::UnsupportedSpec, "unknown family '" + std::string(1, text[0]) + "'");
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorKind::UnsupportedSpec, "cannot parse Coxeter type '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 1'000'000) fail(ErrorKind::UnsupportedSpec, "rank too large");
  }
  CoxeterSpec spec{static_cast<Family>(f), rank};
  check_spec(spec);
  return spec;
}

std::string CoxeterSpec::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool CoxeterSpec::is_classical() const {
  return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

void check_spec(const CoxeterSpec& spec) {
  const int n = spec.rank;
  bool ok = false;
  switch (spec.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B:
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok) fail(ErrorKind::UnsupportedSpec, "rank out of range for type " + spec.name());
}

BigInt weyl_group_order(const CoxeterSpec& spec) {
  check_spec(spec);
  BigInt factorial = 1;
  auto fact = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int n = spec.rank;
  switch (spec.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: {
      BigInt p2 = 1;
      mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), n);
      return p2 * fact(n);
    }
    case Family::D: {
      BigInt p2 = 1;
      mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), n - 1);
      return p2 * fact(n);
    }
    case Family::E:
      if (n == 6) return BigInt(51840);
      if (n == 7) return BigInt(2903040);
      return BigInt(696729600);
    case Family::F: return BigInt(1152);
    case Family::G: return BigInt(12);
  }
  return factorial;
}

// ---------------------------------------------------------------------------
// BigPermutation

BigPermutation BigPermutation::identity(int degree) {
  BigPermutation p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

BigPermutation operator*(const BigPermutation& a, const BigPermutation& b) {
  BigPermutation out;
  out.images.resize(b.images.size());
  for (std::size_t i = 0; i < b.images.size(); ++i) out.images[i] = a.images[b.images[i] - 1];
  return out;
}

BigPermutation BigPermutation::inverse() const {
  BigPermutation out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[images[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

bool BigPermutation::commutes_with_involution() const {
  const int m = degree();
  for (int i = 1; i <= m; ++i)
    if ((*this)(m + 1 - i) != m + 1 - (*this)(i)) return false;
  return true;
}

std::string BigPermutation::one_line() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(images[i]);
  }
  return s + "]";
}

std::vector<int> cycle_type(const BigPermutation& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.images.size(), false);
  for (int start = 1; start <= p.degree(); ++start) {
    if (seen[start - 1]) continue;
    int len = 0;
    for (int x = start; !seen[x - 1]; x = p(x)) {
      seen[x - 1] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

// ---------------------------------------------------------------------------
// WeylGroup

std::shared_ptr<const WeylGroup> WeylGroup::build(const CoxeterSpec& spec) {
  check_spec(spec);
  if (spec.rank > kMaxRank)
    fail(ErrorKind::UnsupportedSpec, "rank " + std::to_string(spec.rank) + " exceeds the supported maximum " +
                                         std::to_string(kMaxRank));
  return std::shared_ptr<const WeylGroup>(new WeylGroup(spec));
}

WeylGroup::WeylGroup(const CoxeterSpec& spec) : spec_(spec), rank_(spec.rank) {
  const auto gram = gram_matrix(spec);
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i) cartan_[j][i] = 2 * gram[j][i] / gram[i][i];

  auto reflect_vec = [&](int i, const RootVector& v) {
    int pairing = 0;
    for (int j = 0; j < rank_; ++j) pairing += v[j] * cartan_[j][i];
    RootVector out = v;
    out[i] = static_cast<std::int8_t>(out[i] - pairing);
    return out;
  };

  // Close the simple roots under the simple reflections.
  std::vector<RootVector> found;
  std::unordered_set<std::uint64_t> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < rank_; ++i) {
    RootVector v{};
    v[i] = 1;
    seen.insert(pack(v));
    queue.push_back(v);
  }
  while (!queue.empty()) {
    RootVector v = queue.front();
    queue.pop_front();
    found.push_back(v);
    for (int i = 0; i < rank_; ++i) {
      RootVector u = reflect_vec(i, v);
      if (seen.insert(pack(u)).second) queue.push_back(u);
    }
  }

  std::vector<RootVector> positive;
  for (const auto& v : found)
    if (height(v) > 0) positive.push_back(v);
  std::sort(positive.begin(), positive.end(), [](const RootVector& a, const RootVector& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  num_positive_ = static_cast<int>(positive.size());
  roots_ = positive;
  for (const auto& v : positive) {
    RootVector neg{};
    for (int i = 0; i < kMaxRank; ++i) neg[i] = static_cast<std::int8_t>(-v[i]);
    roots_.push_back(neg);
  }
  for (std::size_t r = 0; r < roots_.size(); ++r) lookup_.emplace(pack(roots_[r]), static_cast<RootIndex>(r));

  generator_action_.assign(rank_, std::vector<RootIndex>(roots_.size()));
  for (int i = 0; i < rank_; ++i)
    for (std::size_t r = 0; r < roots_.size(); ++r)
      generator_action_[i][r] = root_index(reflect_vec(i, roots_[r]));
}

RootIndex WeylGroup::root_index(const RootVector& v) const {
  auto it = lookup_.find(pack(v));
  if (it == lookup_.end()) throw std::out_of_range("not a root");
  return it->second;
}

const BigInt& WeylGroup::order() const {
  std::call_once(order_once_, [this] { order_ = weyl_group_order(spec_); });
  return order_;
}

RootIndex WeylGroup::combine(const WeylElement& w, const RootVector& coords) const {
  int acc[kMaxRank] = {};
  for (int j = 0; j < rank_; ++j) {
    if (coords[j] == 0) continue;
    const RootVector& img = roots_[w.images()[j]];
    for (int i = 0; i < rank_; ++i) acc[i] += coords[j] * img[i];
  }
  RootVector out{};
  for (int i = 0; i < rank_; ++i) out[i] = static_cast<std::int8_t>(acc[i]);
  return root_index(out);
}

RootIndex WeylGroup::apply(const WeylElement& w, RootIndex r) const { return combine(w, roots_[r]); }

WeylElement WeylGroup::identity() const {
  Images images{};
  for (int i = 0; i < rank_; ++i) images[i] = static_cast<RootIndex>(i);
  return WeylElement(this, images);
}

WeylElement WeylGroup::generator(int s) const { return left_multiply(s, identity()); }

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank_) fail(ErrorKind::InvalidArgument, "generator index out of range");
    w = left_multiply(*it, w);
  }
  return w;
}

WeylElement WeylGroup::parse_word(std::string_view text) const {
  std::vector<int> word;
  std::size_t i = 0;
  auto bad = [&] { fail(ErrorKind::InvalidArgument, "cannot parse word '" + std::string(text) + "'"); };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == 'e' && (i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    if (c == 's' || c == 'S') ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) bad();
    int g = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) g = g * 10 + (text[i++] - '0');
    if (g < 1 || g > rank_) fail(ErrorKind::InvalidArgument, "generator s" + std::to_string(g) + " out of range");
    word.push_back(g - 1);
  }
  return from_word(word);
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  Images images{};
  for (int j = 0; j < rank_; ++j) images[j] = apply(a, b.images()[j]);
  return WeylElement(this, images);
}

WeylElement WeylGroup::left_multiply(int s, const WeylElement& w) const {
  Images images{};
  for (int j = 0; j < rank_; ++j) images[j] = generator_action_[s][w.images()[j]];
  return WeylElement(this, images);
}

WeylElement WeylGroup::right_multiply(const WeylElement& w, int s) const {
  Images images = w.images();
  for (int j = 0; j < rank_; ++j) {
    if (j == s) {
      images[j] = negate(w.images()[s]);
    } else if (cartan_[j][s] != 0) {
      images[j] = apply(w, generator_action_[s][j]);
    }
  }
  return WeylElement(this, images);
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  std::vector<int> stripped;
  WeylElement u = w;
  for (;;) {
    int s = 0;
    while (s < rank_ && !is_right_descent(u, s)) ++s;
    if (s == rank_) break;
    stripped.push_back(s);
    u = right_multiply(u, s);
  }
  return from_word(stripped);
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& w) const {
  // The first letter of the ShortLex word is the smallest left descent, i.e.
  // the smallest right descent of the inverse.
  std::vector<int> word;
  WeylElement u = inverse(w);
  for (;;) {
    int s = 0;
    while (s < rank_ && !is_right_descent(u, s)) ++s;
    if (s == rank_) break;
    word.push_back(s);
    u = right_multiply(u, s);
  }
  return word;
}

std::vector<std::vector<long long>> WeylGroup::reflection_matrix(const WeylElement& w) const {
  std::vector<std::vector<long long>> m(rank_, std::vector<long long>(rank_, 0));
  for (int j = 0; j < rank_; ++j) {
    const RootVector& img = roots_[w.images()[j]];
    for (int i = 0; i < rank_; ++i) m[i][j] = img[i];
  }
  return m;
}

WeylElement WeylGroup::longest_element() const {
  WeylElement w = identity();
  for (;;) {
    int s = 0;
    while (s < rank_ && is_right_descent(w, s)) ++s;
    if (s == rank_) return w;
    w = right_multiply(w, s);
  }
}

WeylElement WeylGroup::coxeter_element() const {
  std::vector<int> word(rank_);
  std::iota(word.begin(), word.end(), 0);
  return from_word(word);
}

std::string WeylGroup::format_word(const std::vector<int>& word) const {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += 's' + std::to_string(word[i] + 1);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Free operations

void check_same_group(const WeylElement& a, const WeylElement& b) {
  if (a.group_ptr() == nullptr || a.group_ptr() != b.group_ptr())
    fail(ErrorKind::MixedGroups, "elements belong to different groups");
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  check_same_group(a, b);
  return a.group().multiply(a, b);
}

WeylElement inverse(const WeylElement& a) { return a.group().inverse(a); }

int length(const WeylElement& a) {
  const WeylGroup& g = a.group();
  int count = 0;
  WeylElement u = a;
  for (;;) {
    int s = 0;
    while (s < g.rank() && !g.is_right_descent(u, s)) ++s;
    if (s == g.rank()) return count;
    u = g.right_multiply(u, s);
    ++count;
  }
}

std::vector<int> descents(const WeylElement& a, Side side) {
  const WeylGroup& g = a.group();
  const WeylElement probe = side == Side::Right ? a : g.inverse(a);
  std::vector<int> out;
  for (int s = 0; s < g.rank(); ++s)
    if (g.is_right_descent(probe, s)) out.push_back(s);
  return out;
}

bool bruhat_leq(const WeylElement& y, const WeylElement& w) {
  check_same_group(y, w);
  const WeylGroup& g = w.group();
  // Greedy subword matching from the right end of a reduced word of w:
  // for ws < w, y <= w iff min(y, ys) <= ws.
  const auto word = g.reduced_word(w);
  WeylElement u = y;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (g.is_right_descent(u, *it)) u = g.right_multiply(u, *it);
  return u == g.identity();
}

CharPolyResult char_poly_reflection(const WeylElement& w) {
  CharPolyResult result;
  result.coefficients = characteristic_polynomial(w.group().reflection_matrix(w));
  result.cyclotomic_factors = cyclotomic_factorization(result.coefficients);
  return result;
}

std::string format_cyclotomic_factors(const std::map<int, int>& factors) {
  if (factors.empty()) return "1";
  std::string s;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!s.empty()) s += ' ';
    s += "Phi" + std::to_string(it->first);
    if (it->second > 1) s += "^" + std::to_string(it->second);
  }
  return s;
}

std::vector<WeylElement> conjugacy_class(const WeylElement& w, std::size_t max_size) {
  const WeylGroup& g = w.group();
  std::unordered_set<Images, ImagesHash> seen{w.images()};
  std::vector<WeylElement> members{w};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (int s = 0; s < g.rank(); ++s) {
      WeylElement c = g.right_multiply(g.left_multiply(s, members[head]), s);
      if (seen.insert(c.images()).second) {
        members.push_back(c);
        if (members.size() > max_size)
          fail(ErrorKind::TooLarge, "conjugacy class exceeds " + std::to_string(max_size) + " elements");
      }
    }
  }
  return members;
}

int min_length_in_class(const std::vector<WeylElement>& cls) {
  if (cls.empty()) fail(ErrorKind::InvalidArgument, "empty class");
  int best = length(cls.front());
  for (const auto& x : cls) best = std::min(best, length(x));
  return best;
}

bool is_elliptic(const WeylElement& w) {
  return evaluate(characteristic_polynomial(w.group().reflection_matrix(w)), 1) != 0;
}

std::vector<BigPermutation> big_permutation_generators(const CoxeterSpec& spec) {
  check_spec(spec);
  const int n = spec.rank;
  std::vector<BigPermutation> gens;
  auto swap = [](BigPermutation& p, int a, int b) { std::swap(p.images[a - 1], p.images[b - 1]); };
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) {
        auto p = BigPermutation::identity(n + 1);
        swap(p, i, i + 1);
        gens.push_back(p);
      }
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 1; i < n; ++i) {
        auto p = BigPermutation::identity(2 * n);
        swap(p, i, i + 1);
        swap(p, 2 * n + 1 - i, 2 * n - i);
        gens.push_back(p);
      }
      {
        auto p = BigPermutation::identity(2 * n);
        if (spec.family == Family::D) {
          swap(p, n - 1, n + 1);
          swap(p, n, n + 2);
        } else {
          swap(p, n, n + 1);
        }
        gens.push_back(p);
      }
      break;
    default:
      fail(ErrorKind::UnsupportedFamily, "no permutation model for type " + spec.name());
  }
  return gens;
}

BigPermutation to_big_permutation(const WeylElement& w) {
  const WeylGroup& g = w.group();
  const auto gens = big_permutation_generators(g.spec());
  BigPermutation p = BigPermutation::identity(gens.front().degree());
  for (int s : g.reduced_word(w)) p = p * gens[s];
  return p;
}

}  // namespace coxlab
