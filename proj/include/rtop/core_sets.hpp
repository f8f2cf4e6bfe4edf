/*
 *   Copyright 2026 The rtop Authors
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

#ifndef RTOP_CORE_SETS_HPP
#define RTOP_CORE_SETS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "rtop/errors.hpp"

namespace rtop {

/** Largest universe the engine accepts. */
inline constexpr std::size_t kMaxUniverseSize = 4096;

/** Largest universe whose powerset may be enumerated. */
inline constexpr std::size_t kMaxPowersetSize = 20;

class Universe;
using UniverseRef = std::shared_ptr<const Universe>;

/**
 * A finite, ordered set of labelled elements.
 *
 * Elements are addressed by index inside the engine and by label at the
 * I/O boundary. A universe is immutable once created and is always held
 * through a UniverseRef so that subsets can share it.
 */
class Universe {
public:
	/** Throws InvalidStructure on empty, duplicate or too many labels. */
	static UniverseRef create(std::vector<std::string> labels);

	/** Universe with labels "1".."n". */
	static UniverseRef numbered(std::size_t n);

	std::size_t size() const noexcept { return labels_.size(); }
	const std::vector<std::string> &labels() const noexcept { return labels_; }
	const std::string &label(std::size_t index) const;

	/** Throws UnknownElement if the label is absent. */
	std::size_t index_of(std::string_view label) const;
	bool contains(std::string_view label) const;

	friend bool operator==(const Universe &a, const Universe &b) { return a.labels_ == b.labels_; }

private:
	explicit Universe(std::vector<std::string> labels);

	std::vector<std::string> labels_;
	std::unordered_map<std::string, std::size_t> index_;
};

/** Identical object, or identical label sequence. */
bool same_universe(const UniverseRef &a, const UniverseRef &b) noexcept;

/** Throws UniverseMismatch unless same_universe(a, b). */
void require_same_universe(const UniverseRef &a, const UniverseRef &b);

/**
 * A subset of a finite universe stored as a bitmask.
 *
 * Universes of up to 64 elements fit in the inline word; larger ones spill
 * into additional words. Bits at positions >= n are always clear.
 */
class Subset {
public:
	using Word = std::uint64_t;
	static constexpr std::size_t kWordBits = 64;

	static Subset empty(UniverseRef u);
	static Subset full(UniverseRef u);
	static Subset of(UniverseRef u, std::initializer_list<std::size_t> indices);
	static Subset from_indices(UniverseRef u, std::span<const std::size_t> indices);
	static Subset from_labels(UniverseRef u, std::span<const std::string> labels);
	/** Only for universes of at most 64 elements; stray high bits are rejected. */
	static Subset from_word(UniverseRef u, Word bits);

	const UniverseRef &universe() const noexcept { return universe_; }
	std::size_t universe_size() const noexcept;

	bool contains(std::size_t index) const;
	void insert(std::size_t index);
	void erase(std::size_t index);

	std::size_t count() const noexcept;
	bool empty() const noexcept;
	bool is_full() const noexcept;

	bool is_subset_of(const Subset &other) const;
	bool intersects(const Subset &other) const;

	Subset &operator|=(const Subset &other);
	Subset &operator&=(const Subset &other);
	Subset &operator-=(const Subset &other);

	friend Subset operator|(Subset a, const Subset &b) { return a |= b; }
	friend Subset operator&(Subset a, const Subset &b) { return a &= b; }
	friend Subset operator-(Subset a, const Subset &b) { return a -= b; }
	Subset operator~() const;

	std::vector<std::size_t> indices() const;
	std::vector<std::string> labels() const;
	std::span<const Word> words() const noexcept { return {words_.data(), words_.size()}; }

	template <class F>
	void for_each(F &&f) const
	{
		for (std::size_t w = 0; w < words_.size(); ++w) {
			Word bits = words_[w];
			while (bits != 0) {
				const int bit = __builtin_ctzll(bits);
				f(w * kWordBits + static_cast<std::size_t>(bit));
				bits &= bits - 1;
			}
		}
	}

	friend bool operator==(const Subset &a, const Subset &b);
	/** Canonical order: ascending numeric bit pattern, element 0 least significant. */
	friend std::strong_ordering operator<=>(const Subset &a, const Subset &b);

	std::size_t hash() const noexcept;

private:
	explicit Subset(UniverseRef u);
	void check_index(std::size_t index) const;
	void check_peer(const Subset &other) const;

	UniverseRef universe_;
	boost::container::small_vector<Word, 1> words_;
};

struct SubsetHash {
	std::size_t operator()(const Subset &s) const noexcept { return s.hash(); }
};

Subset complement(const Subset &x);
/** Union of all members; the empty collection yields the empty set of `u`. */
Subset union_of(const UniverseRef &u, std::span<const Subset> xs);
/** Intersection of all members; the empty collection yields U. */
Subset intersection_of(const UniverseRef &u, std::span<const Subset> xs);
bool is_subset(const Subset &x, const Subset &y);

/**
 * All 2^n subsets in ascending bit-pattern order.
 *
 * Lightweight range; iteration materialises one Subset at a time.
 */
class Powerset {
public:
	class iterator {
	public:
		using iterator_category = std::input_iterator_tag;
		using value_type = Subset;
		using difference_type = std::ptrdiff_t;
		using pointer = void;
		using reference = Subset;

		iterator() = default;
		iterator(const UniverseRef *u, std::uint64_t code) : universe_(u), code_(code) {}

		Subset operator*() const { return Subset::from_word(*universe_, code_); }
		iterator &operator++()
		{
			++code_;
			return *this;
		}
		iterator operator++(int)
		{
			iterator tmp = *this;
			++code_;
			return tmp;
		}
		friend bool operator==(const iterator &a, const iterator &b) { return a.code_ == b.code_; }

	private:
		const UniverseRef *universe_ = nullptr;
		std::uint64_t code_ = 0;
	};

	explicit Powerset(UniverseRef u);

	iterator begin() const { return {&universe_, 0}; }
	iterator end() const { return {&universe_, std::uint64_t{1} << universe_->size()}; }
	std::uint64_t size() const noexcept { return std::uint64_t{1} << universe_->size(); }

private:
	UniverseRef universe_;
};

/** Throws CapExceeded when n > kMaxPowersetSize. */
Powerset enumerate_powerset(const UniverseRef &u);

/**
 * A deduplicated family of subsets kept in canonical order.
 */
class SetFamily {
public:
	explicit SetFamily(UniverseRef u);
	SetFamily(UniverseRef u, std::vector<Subset> members);

	const UniverseRef &universe() const noexcept { return universe_; }
	const std::vector<Subset> &members() const noexcept { return members_; }
	std::size_t size() const noexcept { return members_.size(); }
	bool empty() const noexcept { return members_.empty(); }
	auto begin() const noexcept { return members_.begin(); }
	auto end() const noexcept { return members_.end(); }
	const Subset &operator[](std::size_t i) const { return members_[i]; }

	bool contains(const Subset &s) const;
	/** Family with `s` added (no-op when present). */
	SetFamily with(const Subset &s) const;
	SetFamily without(const Subset &s) const;

	friend bool operator==(const SetFamily &a, const SetFamily &b);

private:
	UniverseRef universe_;
	std::vector<Subset> members_;
};

} // namespace rtop

#endif // RTOP_CORE_SETS_HPP
