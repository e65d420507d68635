#pragma once

#include <map>
#include <optional>

#include "asreg/presentation.hpp"

namespace asreg {

// Word-rewriting oracle: orients the quadratic relations by graded-lex
// leading word and counts/reduces against irreducible words. Fully
// independent of the linear-algebra quotient; used to cross-check it.
// When the orientation is not confluent the oracle abstains (orient()
// returns a system whose confluent() is false) and linear algebra is the
// sole authority.
class RewriteSystem {
public:
    static RewriteSystem orient(const QuadraticPresentation& p);

    bool confluent() const { return confluent_; }
    size_t gen_count() const { return n_; }

    bool is_lead(size_t a, size_t b) const { return rule_of_[a * n_ + b] >= 0; }

    std::vector<Word> irreducible_words(size_t d) const;
    size_t irreducible_count(size_t d) const;

    // Full normal form as sparse coordinates over irreducible word offsets.
    std::map<size_t, Rational> reduce_word(const Word& w) const;
    std::map<size_t, Rational> reduce(const TensorElement& e) const;

    size_t right_ideal_dim(const std::vector<TensorElement>& gens, size_t d) const;

private:
    size_t n_ = 0;
    bool confluent_ = false;
    // rule r: lead word offset -> tail (strictly smaller words)
    std::vector<std::vector<std::pair<size_t, Rational>>> tails_;
    std::vector<int> rule_of_; // per 2-letter offset, rule index or -1
};

} // namespace asreg
