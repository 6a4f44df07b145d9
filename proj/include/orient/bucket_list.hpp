#pragma once

#include <cstdint>
#include <vector>

namespace orient {

using Vertex = int;

// Doubly linked list of non-empty buckets, keys strictly decreasing from the
// front; every bucket holds a doubly linked member list. New members enter at
// the head of their bucket, so First(Max(...)) = head of the front bucket is
// deterministic (most recently inserted wins ties).
//
// move() walks bucket-by-bucket from the member's current bucket and reports
// the number of bucket boundaries crossed, which is what the relocation cost
// metric counts.
class BucketList {
public:
    struct Bucket;
    struct Node {
        Vertex v;
        Node* prev;
        Node* next;
        Bucket* bucket;
    };
    struct Bucket {
        long long key;
        Bucket* higher;  // toward larger keys
        Bucket* lower;
        Node* head;
        Node* tail;
        int size;
    };

    BucketList() = default;
    ~BucketList();
    BucketList(const BucketList&) = delete;
    BucketList& operator=(const BucketList&) = delete;
    BucketList(BucketList&& o) noexcept;
    BucketList& operator=(BucketList&& o) noexcept;

    bool empty() const { return top_ == nullptr; }
    int size() const { return size_; }

    Node* insert(Vertex v, long long key);
    void erase(Node* n);
    // Re-keys n; returns 1 + number of bucket boundaries walked.
    long long move(Node* n, long long new_key);

    Node* first_max() const { return top_ ? top_->head : nullptr; }
    Node* first_min() const { return bottom_ ? bottom_->head : nullptr; }
    Bucket* top_bucket() const { return top_; }
    long long max_key() const;
    long long min_key() const;

private:
    Bucket* find_or_make(long long key, Bucket* hint);
    void detach(Node* n);           // unlink from its bucket, drop empty bucket
    void attach(Node* n, Bucket* b);
    void clear();

    Bucket* top_ = nullptr;     // highest key
    Bucket* bottom_ = nullptr;  // lowest key
    int size_ = 0;
};

}  // namespace orient
