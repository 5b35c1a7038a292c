// Copyright 2026 The qperm Authors
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

#include "qperm/partition.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qperm {

SetPartition::SetPartition(size_t k, std::vector<std::vector<int>> blocks) : k_(k) {
    std::vector<int> seen(k, 0);
    for (auto &b : blocks) {
        if (b.empty()) {
            throw std::invalid_argument("partition has an empty block");
        }
        std::sort(b.begin(), b.end());
        for (int x : b) {
            if (x < 1 || static_cast<size_t>(x) > k) {
                throw std::invalid_argument("partition element " + std::to_string(x) +
                                            " outside 1.." + std::to_string(k));
            }
            if (seen[x - 1]++) {
                throw std::invalid_argument("partition element " + std::to_string(x) +
                                            " appears twice");
            }
        }
    }
    for (size_t i = 0; i < k; ++i) {
        if (!seen[i]) {
            throw std::invalid_argument("partition misses element " + std::to_string(i + 1));
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto &x, const auto &y) { return x.front() < y.front(); });
    blocks_ = std::move(blocks);
    labels_.assign(k, 0);
    for (size_t b = 0; b < blocks_.size(); ++b) {
        for (int x : blocks_[b]) {
            labels_[x - 1] = static_cast<int>(b);
        }
    }
}

SetPartition SetPartition::parse(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    size_t pos = 0;
    int max_elem = 0;
    auto skip_ws = [&]() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '{') {
            throw std::invalid_argument("expected '{' in partition '" + std::string(text) + "'");
        }
        ++pos;
        std::vector<int> block;
        while (true) {
            skip_ws();
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            }
            if (start == pos) {
                throw std::invalid_argument("expected an integer in partition '" +
                                            std::string(text) + "'");
            }
            int v = std::stoi(std::string(text.substr(start, pos - start)));
            block.push_back(v);
            max_elem = std::max(max_elem, v);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            throw std::invalid_argument("unterminated block in partition '" + std::string(text) +
                                        "'");
        }
        blocks.push_back(std::move(block));
        skip_ws();
    }
    if (blocks.empty()) {
        throw std::invalid_argument("empty partition text");
    }
    return SetPartition(static_cast<size_t>(max_elem), std::move(blocks));
}

SetPartition SetPartition::singletons(size_t k) {
    std::vector<std::vector<int>> blocks;
    for (size_t i = 1; i <= k; ++i) {
        blocks.push_back({static_cast<int>(i)});
    }
    return SetPartition(k, std::move(blocks));
}

SetPartition SetPartition::one_block(size_t k) {
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 1);
    return SetPartition(k, {all});
}

SetPartition SetPartition::from_labels(const std::vector<int> &labels) {
    std::map<int, std::vector<int>> groups;
    for (size_t i = 0; i < labels.size(); ++i) {
        groups[labels[i]].push_back(static_cast<int>(i + 1));
    }
    std::vector<std::vector<int>> blocks;
    for (auto &[label, block] : groups) {
        blocks.push_back(std::move(block));
    }
    return SetPartition(labels.size(), std::move(blocks));
}

bool SetPartition::refines(const SetPartition &coarser) const {
    for (const auto &b : blocks_) {
        for (int x : b) {
            if (!coarser.same_block(b.front(), x)) {
                return false;
            }
        }
    }
    return true;
}

std::string SetPartition::to_string() const {
    std::string s;
    for (const auto &b : blocks_) {
        s += "{";
        for (size_t i = 0; i < b.size(); ++i) {
            s += (i ? "," : "") + std::to_string(b[i]);
        }
        s += "}";
    }
    return s;
}

bool SetPartition::operator<(const SetPartition &other) const {
    if (k_ != other.k_) {
        return k_ < other.k_;
    }
    return blocks_ < other.blocks_;
}

bool labels_noncrossing(const std::vector<int> &labels) {
    // Scan left to right keeping a stack of blocks that are open (seen, with
    // more points to come). A revisited block must be on top of the stack.
    std::map<int, size_t> last;
    for (size_t i = 0; i < labels.size(); ++i) {
        last[labels[i]] = i;
    }
    std::vector<int> stack;
    std::map<int, bool> opened;
    for (size_t i = 0; i < labels.size(); ++i) {
        int b = labels[i];
        if (!opened[b]) {
            opened[b] = true;
            if (last[b] != i) {
                stack.push_back(b);
            }
            continue;
        }
        if (stack.empty() || stack.back() != b) {
            return false;
        }
        if (last[b] == i) {
            stack.pop_back();
        }
    }
    return true;
}

bool is_noncrossing(const SetPartition &p) {
    return labels_noncrossing(p.labels());
}

std::vector<SetPartition> enumerate_set_partitions(size_t k) {
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<SetPartition> out;
    if (k == 0) {
        return out;
    }
    std::vector<int> rgs(k, 0);
    std::vector<int> prefix_max(k, 0);
    while (true) {
        out.push_back(SetPartition::from_labels(rgs));
        size_t i = k;
        while (i-- > 1) {
            if (rgs[i] <= prefix_max[i - 1]) {
                break;
            }
        }
        if (i == 0) {
            break;
        }
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (size_t j = i + 1; j < k; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NCPartition> enumerate_nc(size_t k, size_t cap) {
    if (k == 0 || k > cap) {
        throw std::out_of_range("NC(k) enumeration needs 1 <= k <= " + std::to_string(cap));
    }
    // Bell(10) is about 1.2e5, so filtering all set partitions is cheap.
    std::vector<NCPartition> out;
    for (auto &p : enumerate_set_partitions(k)) {
        if (is_noncrossing(p)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

NCPartition kreweras(const NCPartition &p) {
    const size_t k = p.size();
    // The relation is an equivalence, so linking j' to the first related i'
    // is enough.
    std::vector<int> labels(k);
    std::iota(labels.begin(), labels.end(), 0);
    auto interval_is_union = [&](size_t i, size_t j) {
        // points i+1..j (1-based)
        for (size_t x = i + 1; x <= j; ++x) {
            for (int y : p.blocks()[p.labels()[x - 1]]) {
                if (static_cast<size_t>(y) <= i || static_cast<size_t>(y) > j) {
                    return false;
                }
            }
        }
        return true;
    };
    for (size_t j = 1; j <= k; ++j) {
        for (size_t i = 1; i < j; ++i) {
            if (interval_is_union(i, j)) {
                labels[j - 1] = labels[i - 1];
                break;
            }
        }
    }
    return SetPartition::from_labels(labels);
}

bool interleaved_noncrossing(const NCPartition &p, const NCPartition &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("interleaving needs partitions of equal size");
    }
    const int offset = static_cast<int>(p.block_count());
    std::vector<int> labels;
    labels.reserve(2 * p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        labels.push_back(p.labels()[i]);
        labels.push_back(offset + q.labels()[i]);
    }
    return labels_noncrossing(labels);
}

int delta(const SetPartition &p, const MultiIndex &j) {
    if (j.size() != p.size()) {
        throw std::invalid_argument("delta: multi-index length " + std::to_string(j.size()) +
                                    " does not match partition size " + std::to_string(p.size()));
    }
    for (const auto &b : p.blocks()) {
        for (int x : b) {
            if (j[x - 1] != j[b.front() - 1]) {
                return 0;
            }
        }
    }
    return 1;
}

SetPartition join(const SetPartition &p, const SetPartition &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("join: partitions of different sizes");
    }
    const size_t k = p.size();
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](const SetPartition &s) {
        for (const auto &b : s.blocks()) {
            for (int x : b) {
                parent[find(x - 1)] = find(b.front() - 1);
            }
        }
    };
    unite(p);
    unite(q);
    std::vector<int> labels(k);
    for (size_t i = 0; i < k; ++i) {
        labels[i] = find(static_cast<int>(i));
    }
    return SetPartition::from_labels(labels);
}

Integer catalan(unsigned k) {
    return binomial(2 * k, k) / (k + 1);
}

}  // namespace qperm
