#include "derw/morphism.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace derw {

Morphism::Morphism(Alphabet domain, Alphabet codomain,
                   std::vector<std::string> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_.size()) {
    throw Error("morphism needs exactly one image per domain letter");
  }
  for (const auto& img : images_) {
    for (char c : img) {
      if (!codomain_.contains(c)) {
        throw Error(std::string("image letter '") + c +
                    "' is not in codomain {" + codomain_.letters() + "}");
      }
    }
  }
}

Morphism Morphism::identity(const Alphabet& a) {
  std::vector<std::string> images;
  for (char c : a.letters()) images.emplace_back(1, c);
  return Morphism(a, a, std::move(images));
}

Morphism Morphism::parse(std::string_view rules) {
  std::string domain_letters;
  std::vector<std::string> images;
  std::size_t pos = 0;
  while (pos <= rules.size()) {
    std::size_t end = rules.find(';', pos);
    if (end == std::string_view::npos) end = rules.size();
    std::string_view rule = rules.substr(pos, end - pos);
    std::size_t arrow = rule.find("->");
    if (arrow != 1 || rule.empty()) {
      throw Error("bad rule \"" + std::string(rule) +
                  "\" (expected letter->word)");
    }
    char lhs = rule[0];
    if (domain_letters.find(lhs) != std::string::npos) {
      throw Error(std::string("duplicate rule for letter '") + lhs + "'");
    }
    domain_letters.push_back(lhs);
    images.emplace_back(rule.substr(arrow + 2));
    if (end == rules.size()) break;
    pos = end + 1;
  }
  if (domain_letters.empty()) throw Error("empty morphism rule text");

  std::set<char> rhs;
  for (const auto& img : images) rhs.insert(img.begin(), img.end());
  bool rhs_within_domain = std::all_of(rhs.begin(), rhs.end(), [&](char c) {
    return domain_letters.find(c) != std::string::npos;
  });
  Alphabet domain(domain_letters);
  Alphabet codomain =
      rhs_within_domain ? domain : Alphabet(std::string(rhs.begin(), rhs.end()));
  return Morphism(std::move(domain), std::move(codomain), std::move(images));
}

const std::string& Morphism::image(int id) const {
  if (id < 0 || id >= domain_.size()) {
    throw Error("image id out of range");
  }
  return images_[static_cast<std::size_t>(id)];
}

const std::string& Morphism::image_of(char letter) const {
  return images_[static_cast<std::size_t>(domain_.id(letter))];
}

bool Morphism::is_erasing() const {
  return std::any_of(images_.begin(), images_.end(),
                     [](const std::string& s) { return s.empty(); });
}

std::size_t Morphism::max_image_length() const {
  std::size_t m = 0;
  for (const auto& img : images_) m = std::max(m, img.size());
  return m;
}

std::string Morphism::apply_chars(std::string_view w) const {
  std::string out;
  std::size_t total = 0;
  for (char c : w) total += image_of(c).size();
  out.reserve(total);
  for (char c : w) out += image_of(c);
  return out;
}

Word Morphism::apply(const Word& w) const {
  if (w.alphabet() != domain_) {
    throw AlphabetMismatch("cannot apply morphism over {" + domain_.letters() +
                           "} to a word over {" + w.alphabet().letters() + "}");
  }
  return Word(codomain_, apply_chars(w.view()));
}

std::string Morphism::format() const {
  std::string out;
  for (int i = 0; i < domain_.size(); ++i) {
    if (i > 0) out.push_back(';');
    out.push_back(domain_.display(i));
    out += "->";
    out += images_[static_cast<std::size_t>(i)];
  }
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.codomain() != outer.domain()) {
    throw AlphabetMismatch("compose: codomain {" + inner.codomain().letters() +
                           "} does not match domain {" +
                           outer.domain().letters() + "}");
  }
  std::vector<std::string> images;
  images.reserve(static_cast<std::size_t>(inner.domain().size()));
  for (int i = 0; i < inner.domain().size(); ++i) {
    images.push_back(outer.apply_chars(inner.image(i)));
  }
  return Morphism(inner.domain(), outer.codomain(), std::move(images));
}

Morphism power(const Morphism& phi, int k) {
  if (!phi.is_endomorphism()) {
    throw Error("power requires an endomorphism");
  }
  if (k < 0) throw Error("power requires k >= 0");
  Morphism acc = Morphism::identity(phi.domain());
  for (int i = 0; i < k; ++i) acc = compose(phi, acc);
  return acc;
}

IncidenceMatrix::IncidenceMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
               0) {}

long long& IncidenceMatrix::at(int a, int b) {
  return entries_[static_cast<std::size_t>(a) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(b)];
}

long long IncidenceMatrix::at(int a, int b) const {
  return entries_[static_cast<std::size_t>(a) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(b)];
}

IncidenceMatrix incidence_matrix(const Morphism& phi) {
  IncidenceMatrix m(phi.codomain().size(), phi.domain().size());
  for (int b = 0; b < phi.domain().size(); ++b) {
    for (char c : phi.image(b)) {
      ++m.at(phi.codomain().id(c), b);
    }
  }
  return m;
}

IncidenceMatrix multiply(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.cols() != b.rows()) throw Error("incidence matrix shape mismatch");
  IncidenceMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      long long v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) += v * b.at(k, j);
      }
    }
  }
  return out;
}

Primitivity is_primitive(const Morphism& phi) {
  if (!phi.is_endomorphism()) {
    throw Error("primitivity is defined for endomorphisms only");
  }
  int n = phi.domain().size();
  // Work with occurrence patterns; positivity of the k-th matrix power is all
  // that matters.
  std::vector<std::vector<bool>> base(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int b = 0; b < n; ++b) {
    for (char c : phi.image(b)) {
      base[static_cast<std::size_t>(phi.domain().id(c))][static_cast<std::size_t>(b)] = true;
    }
  }
  auto all_positive = [n](const std::vector<std::vector<bool>>& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) return false;
    return true;
  };
  int cap = (n - 1) * (n - 1) + 1;  // Wielandt
  auto current = base;
  for (int k = 1; k <= cap; ++k) {
    if (all_positive(current)) return {true, k};
    // current := current * base (boolean product)
    std::vector<std::vector<bool>> next(
        static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) {
      for (int k2 = 0; k2 < n; ++k2) {
        if (!current[static_cast<std::size_t>(i)][static_cast<std::size_t>(k2)]) continue;
        for (int j = 0; j < n; ++j) {
          if (base[static_cast<std::size_t>(k2)][static_cast<std::size_t>(j)]) {
            next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
          }
        }
      }
    }
    current = std::move(next);
  }
  return {false, 0};
}

bool is_injective(const Morphism& phi) {
  std::set<std::string> code;
  for (int i = 0; i < phi.domain().size(); ++i) {
    const std::string& img = phi.image(i);
    if (img.empty()) return false;
    if (!code.insert(img).second) return false;  // two letters share an image
  }
  // Sardinas-Patterson: the image set is uniquely decodable iff no dangling
  // suffix equals a codeword.
  std::set<std::string> seen;
  std::deque<std::string> queue;
  auto push = [&](std::string s) {
    if (seen.insert(s).second) queue.push_back(std::move(s));
  };
  for (const auto& u : code) {
    for (const auto& v : code) {
      if (u.size() < v.size() && v.compare(0, u.size(), u) == 0) {
        push(v.substr(u.size()));
      }
    }
  }
  while (!queue.empty()) {
    std::string d = std::move(queue.front());
    queue.pop_front();
    if (code.count(d)) return false;
    for (const auto& c : code) {
      if (d.size() < c.size() && c.compare(0, d.size(), d) == 0) {
        push(c.substr(d.size()));
      } else if (c.size() < d.size() && d.compare(0, c.size(), c) == 0) {
        push(d.substr(c.size()));
      }
    }
  }
  return true;
}

}  // namespace derw
