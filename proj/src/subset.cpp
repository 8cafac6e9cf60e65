#include "trisphom/subset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trisphom {

SubsetElement::SubsetElement(int p, std::vector<int> members)
    : p_(p), members_(std::move(members)) {
    if (p < 2) {
        throw std::invalid_argument("subset ground set must have size >= 2");
    }
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) !=
        members_.end()) {
        throw std::invalid_argument("subset member listed twice");
    }
    if (members_.empty()) {
        throw std::invalid_argument("subset element must be nonempty");
    }
    if (static_cast<int>(members_.size()) >= p) {
        throw std::invalid_argument("subset element must be a proper subset");
    }
    for (int x : members_) {
        if (x < 1 || x > p) {
            throw std::invalid_argument("subset member out of range: " +
                                        std::to_string(x));
        }
    }
}

SubsetElement SubsetElement::parse(const std::string& text, int p) {
    std::vector<int> members;
    std::string digits;
    auto flush = [&]() {
        if (!digits.empty()) {
            members.push_back(std::stoi(digits));
            digits.clear();
        }
    };
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
        } else if (ch == ',' || ch == ' ' || ch == '{' || ch == '}') {
            flush();
        } else {
            throw std::invalid_argument(std::string("bad character '") + ch +
                                        "' in subset string");
        }
    }
    flush();
    return SubsetElement(p, std::move(members));
}

bool SubsetElement::contains(int element) const {
    return std::binary_search(members_.begin(), members_.end(), element);
}

bool SubsetElement::proper_subset_of(const SubsetElement& other) const {
    if (other.p_ != p_) {
        throw std::invalid_argument("inclusion across different ground sets");
    }
    if (members_.size() >= other.members_.size()) return false;
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

std::string SubsetElement::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) out << ',';
        out << members_[i];
    }
    out << '}';
    return out.str();
}

}  // namespace trisphom
