#include "orient/bucket_list.hpp"

#include <cassert>
#include <utility>

namespace orient {

BucketList::~BucketList() { clear(); }

BucketList::BucketList(BucketList&& o) noexcept
    : top_(o.top_), bottom_(o.bottom_), size_(o.size_) {
    o.top_ = o.bottom_ = nullptr;
    o.size_ = 0;
}

BucketList& BucketList::operator=(BucketList&& o) noexcept {
    if (this != &o) {
        clear();
        top_ = o.top_;
        bottom_ = o.bottom_;
        size_ = o.size_;
        o.top_ = o.bottom_ = nullptr;
        o.size_ = 0;
    }
    return *this;
}

void BucketList::clear() {
    Bucket* b = top_;
    while (b) {
        Node* n = b->head;
        while (n) {
            Node* nx = n->next;
            delete n;
            n = nx;
        }
        Bucket* bl = b->lower;
        delete b;
        b = bl;
    }
    top_ = bottom_ = nullptr;
    size_ = 0;
}

long long BucketList::max_key() const {
    assert(top_);
    return top_->key;
}

long long BucketList::min_key() const {
    assert(bottom_);
    return bottom_->key;
}

BucketList::Bucket* BucketList::find_or_make(long long key, Bucket* hint) {
    // Walk from hint (or the top) to the bucket with this key, creating it
    // in place if absent.
    Bucket* b = hint ? hint : top_;
    if (!b) {
        Bucket* nb = new Bucket{key, nullptr, nullptr, nullptr, nullptr, 0};
        top_ = bottom_ = nb;
        return nb;
    }
    while (b->key < key && b->higher) b = b->higher;
    while (b->key > key && b->lower) b = b->lower;
    if (b->key == key) return b;
    Bucket* nb = new Bucket{key, nullptr, nullptr, nullptr, nullptr, 0};
    if (b->key < key) {  // insert nb just above b
        nb->lower = b;
        nb->higher = b->higher;
        if (b->higher) b->higher->lower = nb; else top_ = nb;
        b->higher = nb;
    } else {  // insert nb just below b
        nb->higher = b;
        nb->lower = b->lower;
        if (b->lower) b->lower->higher = nb; else bottom_ = nb;
        b->lower = nb;
    }
    return nb;
}

void BucketList::attach(Node* n, Bucket* b) {
    n->bucket = b;
    n->prev = nullptr;
    n->next = b->head;
    if (b->head) b->head->prev = n; else b->tail = n;
    b->head = n;
    ++b->size;
}

void BucketList::detach(Node* n) {
    Bucket* b = n->bucket;
    if (n->prev) n->prev->next = n->next; else b->head = n->next;
    if (n->next) n->next->prev = n->prev; else b->tail = n->prev;
    --b->size;
    n->prev = n->next = nullptr;
    n->bucket = nullptr;
    if (b->size == 0) {
        if (b->higher) b->higher->lower = b->lower; else top_ = b->lower;
        if (b->lower) b->lower->higher = b->higher; else bottom_ = b->higher;
        delete b;
    }
}

BucketList::Node* BucketList::insert(Vertex v, long long key) {
    Node* n = new Node{v, nullptr, nullptr, nullptr};
    attach(n, find_or_make(key, nullptr));
    ++size_;
    return n;
}

void BucketList::erase(Node* n) {
    detach(n);
    delete n;
    --size_;
}

long long BucketList::move(Node* n, long long new_key) {
    Bucket* cur = n->bucket;
    if (cur->key == new_key) return 1;
    // Count boundaries crossed while locating the target neighbourhood.
    long long steps = 1;
    Bucket* probe = cur;
    if (new_key > cur->key) {
        while (probe->higher && probe->higher->key <= new_key) {
            probe = probe->higher;
            ++steps;
        }
    } else {
        while (probe->lower && probe->lower->key >= new_key) {
            probe = probe->lower;
            ++steps;
        }
    }
    if (probe == cur) probe = nullptr;  // neighbour buckets don't reach new_key
    detach(n);  // may delete cur (and invalidate probe if probe == cur)
    Bucket* b = find_or_make(new_key, probe);
    attach(n, b);
    return steps;
}

}  // namespace orient
