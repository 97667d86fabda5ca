#include "bgray/stepper.hpp"

#include <stdexcept>
#include <vector>

namespace bgray {

char rule_char(Rule r) {
    return static_cast<char>('a' + static_cast<int>(r));
}

GrayCursor::GrayCursor(const BinaryPartition& p) {
    digit_t below_top = 0;
    for (const auto& ld : p.digits()) {
        levels_.push_back(ld);
        below_top += ld.count;
    }
    if (!levels_.empty())
        below_top -= levels_.front().count;
    eps_ = (below_top % 2 == 0) ? 1 : -1;
}

BinaryPartition GrayCursor::partition() const {
    return BinaryPartition::from_digits({levels_.begin(), levels_.end()});
}

Rule GrayCursor::classify(StepDirection dir) const {
    if (levels_.empty()) {
        if (dir == StepDirection::backward)
            throw std::domain_error("the empty partition has no predecessor");
        return Rule::d; // the 1+1 -> 2 move producing the single part 2
    }
    auto head = levels_.begin();
    auto second = std::next(head);
    bool top_branch = (dir == StepDirection::forward) ? (eps_ == -1) : (eps_ == 1);
    if (head->count % 2 == 1) {
        if (top_branch)
            return head->count == 1 ? Rule::a : Rule::b;
        if (second != levels_.end() && second->count == 1)
            return Rule::c;
        return Rule::d;
    }
    return top_branch ? Rule::e : Rule::f;
}

Move GrayCursor::step(StepDirection dir) {
    last_touches_ = 0;
    if (levels_.empty()) {
        if (dir == StepDirection::backward)
            throw std::domain_error("the empty partition has no predecessor");
        levels_.push_back({1, 1});
        touch(1);
        eps_ = 1;
        if (index_)
            *index_ += 1;
        max_touches_ = std::max(max_touches_, last_touches_);
        return {Rule::d, MoveAction::merge, 0, +2};
    }

    Rule rule = classify(dir);
    if (index_)
        *index_ += (dir == StepDirection::forward) ? 1 : -1;
    auto end = levels_.end();
    auto head = levels_.begin();
    auto second = std::next(head);
    touch(second == end ? 1 : 2); // classification reads
    level_t i = head->level;
    level_t j = (second == end) ? 0 : second->level;
    Move move{rule, MoveAction::merge, 0, 0};
    bool flip = false;

    switch (rule) {
    case Rule::a: {
        // Remove the single top part; two parts appear one level down
        // (discarded when that level is 0).
        flip = (second != end && j == i - 1 && second->count % 2 == 1);
        levels_.erase(head);
        touch(1);
        move.action = MoveAction::split;
        move.level = i - 1;
        if (i >= 2) {
            auto front = levels_.begin();
            if (front != levels_.end() && front->level == i - 1)
                front->count += 2;
            else
                levels_.insert(front, {i - 1, 2});
            touch(1);
        } else {
            move.size_delta = -2;
        }
        break;
    }
    case Rule::b: {
        // Two top parts merge into one part a level up; d_i stays >= 1.
        flip = true;
        levels_.insert(head, {i + 1, 1});
        head->count -= 2;
        touch(2);
        move.action = MoveAction::merge;
        move.level = i;
        break;
    }
    case Rule::c: {
        // Remove the single second part; two parts appear one level down.
        flip = true;
        auto third = std::next(second);
        levels_.erase(second);
        touch(1);
        move.action = MoveAction::split;
        move.level = j - 1;
        if (j >= 2) {
            if (third != end && third->level == j - 1)
                third->count += 2;
            else
                levels_.insert(third, {j - 1, 2});
            touch(1);
        } else {
            move.size_delta = -2;
        }
        break;
    }
    case Rule::d: {
        // Two second parts merge one level up; at j = 0 two implicit 1s
        // become a new part 2 and the size grows.
        flip = (i != j + 1);
        move.action = MoveAction::merge;
        move.level = j;
        if (second == end) { // j = 0
            if (i == 1)
                head->count += 1;
            else
                levels_.push_back({1, 1});
            touch(1);
            move.size_delta = +2;
        } else {
            if (j + 1 == i)
                head->count += 1;
            else
                levels_.insert(second, {j + 1, 1});
            touch(1);
            second->count -= 2;
            touch(1);
            if (second->count == 0) {
                levels_.erase(second);
                touch(1);
            }
        }
        break;
    }
    case Rule::e: {
        // Split one of the top parts one level down.
        head->count -= 1;
        touch(1);
        move.action = MoveAction::split;
        move.level = i - 1;
        if (i >= 2) {
            if (second != end && j == i - 1)
                second->count += 2;
            else
                levels_.insert(second, {i - 1, 2});
            touch(1);
        } else {
            move.size_delta = -2;
        }
        break;
    }
    case Rule::f: {
        // Two top parts merge into one part a level up.
        levels_.insert(head, {i + 1, 1});
        head->count -= 2;
        touch(2);
        if (head->count == 0) {
            levels_.erase(head);
            touch(1);
        }
        move.action = MoveAction::merge;
        move.level = i;
        break;
    }
    }

    if (flip)
        eps_ = -eps_;
    max_touches_ = std::max(max_touches_, last_touches_);
    return move;
}

BinaryPartition successor(const BinaryPartition& p) {
    GrayCursor cursor(p);
    cursor.step(StepDirection::forward);
    return cursor.partition();
}

BinaryPartition predecessor(const BinaryPartition& p) {
    GrayCursor cursor(p);
    cursor.step(StepDirection::backward);
    return cursor.partition();
}

} // namespace bgray
