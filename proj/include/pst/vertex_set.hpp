/*
 * Copyright 2026 The pst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PST_VERTEX_SET_HPP
#define PST_VERTEX_SET_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pst {

using VertexId = std::uint32_t;

/**
 * Bitset over the vertex range [0, universe) of one graph.
 * Iteration visits members in ascending order.
 */
class VertexSet
{
    using Bits = boost::dynamic_bitset<std::uint64_t>;

public:
    class const_iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        const_iterator() = default;
        const_iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

        VertexId operator*() const { return static_cast<VertexId>(pos_); }
        const_iterator& operator++()
        {
            pos_ = bits_->find_next(pos_);
            return *this;
        }
        const_iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        const Bits* bits_ = nullptr;
        std::size_t pos_ = Bits::npos;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : bits_(universe) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : bits_(universe)
    {
        for (auto v : members) bits_.set(v);
    }

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        s.bits_.set();
        return s;
    }

    static VertexSet of(std::size_t universe, const std::vector<VertexId>& members)
    {
        VertexSet s(universe);
        for (auto v : members) s.bits_.set(v);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool contains(VertexId v) const { return bits_.test(v); }

    void insert(VertexId v) { bits_.set(v); }
    void erase(VertexId v) { bits_.reset(v); }
    void clear() { bits_.reset(); }

    bool isSubsetOf(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
    bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

    VertexSet complement() const
    {
        VertexSet s(*this);
        s.bits_.flip();
        return s;
    }

    VertexSet& operator|=(const VertexSet& o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o)
    {
        bits_ -= o.bits_;
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

    const_iterator begin() const { return {&bits_, bits_.find_first()}; }
    const_iterator end() const { return {&bits_, Bits::npos}; }

    std::vector<VertexId> toVector() const { return {begin(), end()}; }

private:
    Bits bits_;
};

} // namespace pst

#endif
