#pragma once

#include <cctype>
#include <string>
#include <string_view>

namespace starop {

namespace detail {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

/// Compares two digit runs by numeric value without parsing into an integer
/// (tokens may exceed any integer width). Strips leading zeros, compares by
/// stripped length, then digit-wise. Equal values order by fewer leading
/// zeros first, so "7" < "007".
inline int compare_digit_runs(std::string_view a, std::string_view b) {
    std::string_view sa = a.substr(std::min(a.find_first_not_of('0'), a.size()));
    std::string_view sb = b.substr(std::min(b.find_first_not_of('0'), b.size()));
    if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
    if (int c = sa.compare(sb); c != 0) return c < 0 ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace detail

/// Numeric-aware total order on id tokens. Tokens are split into maximal
/// digit / non-digit chunks; digit chunks compare numerically, non-digit
/// chunks lexicographically, and a digit chunk sorts before a non-digit
/// chunk. Hence "99" < "104" and "2a" < "10a".
inline int natural_compare(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = detail::is_digit(a[i]);
        const bool db = detail::is_digit(b[j]);
        if (da != db) return da ? -1 : 1;
        if (da) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && detail::is_digit(a[ie])) ++ie;
            while (je < b.size() && detail::is_digit(b[je])) ++je;
            if (int c = detail::compare_digit_runs(a.substr(i, ie - i), b.substr(j, je - j)); c != 0)
                return c;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j])
                return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]) ? -1 : 1;
            ++i;
            ++j;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

inline bool natural_less(std::string_view a, std::string_view b) {
    return natural_compare(a, b) < 0;
}

/// Opaque node identity. Building numbers like "220" or "104" are labels,
/// not integers; named buildings are ids too. Ordering is the numeric-aware
/// natural order above.
class NodeId {
  public:
    NodeId() = default;
    explicit NodeId(std::string token) : token_(std::move(token)) {}

    const std::string& token() const { return token_; }
    bool empty() const { return token_.empty(); }

    bool operator==(const NodeId&) const = default;
    bool operator<(const NodeId& other) const { return natural_less(token_, other.token_); }

  private:
    std::string token_;
};

}  // namespace starop
