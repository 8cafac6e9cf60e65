#include "trisphom/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace trisphom {

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 1) {
        throw std::invalid_argument("partition ground set must be nonempty");
    }
    for (auto& block : blocks_) {
        if (block.empty()) {
            throw std::invalid_argument("partition block is empty");
        }
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    block_of_.assign(n + 1, -1);
    for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
        for (int x : blocks_[b]) {
            if (x < 1 || x > n) {
                throw std::invalid_argument(
                    "partition element out of range: " + std::to_string(x));
            }
            if (block_of_[x] != -1) {
                throw std::invalid_argument(
                    "partition blocks overlap at " + std::to_string(x));
            }
            block_of_[x] = b;
        }
    }
    for (int x = 1; x <= n; ++x) {
        if (block_of_[x] == -1) {
            throw std::invalid_argument(
                "partition misses element " + std::to_string(x));
        }
    }
}

Partition Partition::parse(const std::string& text, int n) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> current;
    bool in_block = false;
    std::string digits;

    auto flush_digits = [&]() {
        if (!digits.empty()) {
            current.push_back(std::stoi(digits));
            digits.clear();
        }
    };

    for (char ch : text) {
        if (ch == '{') {
            if (in_block) throw std::invalid_argument("nested '{' in partition");
            in_block = true;
            current.clear();
        } else if (ch == '}') {
            if (!in_block) throw std::invalid_argument("unmatched '}' in partition");
            flush_digits();
            blocks.push_back(current);
            in_block = false;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
        } else if (ch == ',' || ch == ' ') {
            flush_digits();
        } else if (ch == '|') {
            if (in_block) throw std::invalid_argument("'|' inside a block");
        } else {
            throw std::invalid_argument(std::string("bad character '") + ch +
                                        "' in partition string");
        }
    }
    if (in_block) throw std::invalid_argument("unterminated block in partition");
    return Partition(n, std::move(blocks));
}

int Partition::block_of(int element) const {
    if (element < 1 || element > n_) {
        throw std::out_of_range("partition element out of range");
    }
    return block_of_[element];
}

bool Partition::refines(const Partition& coarser) const {
    if (coarser.n_ != n_) {
        throw std::invalid_argument("refinement across different ground sets");
    }
    for (const auto& block : blocks_) {
        const int target = coarser.block_of_[block.front()];
        for (int x : block) {
            if (coarser.block_of_[x] != target) return false;
        }
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b > 0) out << '|';
        out << '{';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i > 0) out << ',';
            out << blocks_[b][i];
        }
        out << '}';
    }
    return out.str();
}

}  // namespace trisphom
