#ifndef WEYLKIT_FREUDENTHAL_HPP_
#define WEYLKIT_FREUDENTHAL_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "weylkit/albert.hpp"

namespace weylkit {

// Element of W = K x A x K x A x K. The middle scalar is the center of the
// 2-step nilpotent structure; dotplus is associative but not commutative.
struct FVector {
  Elem r;
  Albert b;
  Elem s;
  Albert c;
  Elem t;

  static FVector zero(const Ring& R);
  static FVector make(const Elem& r, const Albert& b, const Elem& s, const Albert& c,
                      const Elem& t);

  const Ring& ring() const { return r.ring(); }
  bool operator==(const FVector& o) const;
  bool operator!=(const FVector& o) const { return !(*this == o); }

  std::vector<Elem> coords() const;  // 57 scalars: r, b, s, c, t
  static FVector from_coords(const Ring& R, const std::vector<Elem>& v);

  std::string str() const;
};

FVector f_dotplus(const FVector& v, const FVector& w);
FVector f_scale(const FVector& v, const Elem& k);
FVector f_tau(const FVector& v);
Elem f_theta(const FVector& v);
FVector f_sample(const Ring& R, Rng& rng);

// Closed-form generator actions.
FVector t_plus_action(const Albert& a, const FVector& v);
FVector t_minus_action(const Albert& a, const FVector& v);
FVector dil_action(const Elem& u, const FVector& v);
FVector lmap_action(const NormPreservingMap& g, const NormPreservingMap& g_inv_dagger,
                    const FVector& v);

// Theta-preserving dotplus-automorphism, tabulated on the 57 canonical
// generators and carrying its defining word for inversion.
class FAutomorphism {
 public:
  struct Step {
    enum class Kind { TPlus, TMinus, Dil, LMap };
    Kind kind;
    std::optional<Albert> a;            // TPlus / TMinus
    std::optional<Elem> u;              // Dil
    std::optional<NormPreservingMap> g; // LMap
  };

  static FAutomorphism identity(const Ring& R);
  static FAutomorphism root_plus(const Albert& a);
  static FAutomorphism root_minus(const Albert& a);
  static FAutomorphism dilation(const Elem& u);  // u must be a unit
  static FAutomorphism lmap(const NormPreservingMap& g);

  FVector apply(const FVector& v) const;
  FAutomorphism compose(const FAutomorphism& inner) const;  // apply inner first
  FAutomorphism inverse() const;

  bool operator==(const FAutomorphism& o) const;
  bool operator!=(const FAutomorphism& o) const { return !(*this == o); }

  const Ring& ring() const { return ring_; }
  const std::vector<FVector>& images() const { return img_; }
  const std::vector<Step>& word() const { return word_; }

  // canonical generators, in tabulation order
  static std::vector<FVector> generators(const Ring& R);

 private:
  FAutomorphism(Ring r, std::vector<FVector> img, std::vector<Step> word)
      : ring_(std::move(r)), img_(std::move(img)), word_(std::move(word)) {}

  static FAutomorphism tabulate(const Ring& R, const std::function<FVector(const FVector&)>& f,
                                std::vector<Step> word);

  Ring ring_;
  std::vector<FVector> img_;
  std::vector<Step> word_;
};

}  // namespace weylkit

#endif
