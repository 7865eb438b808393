#include "preisach/worker_pool.hpp"

namespace preisach {

WorkerPool::WorkerPool(std::size_t workers) {
    const std::size_t extra = workers > 1 ? workers - 1 : 0;
    threads_.reserve(extra);
    for (std::size_t i = 0; i < extra; ++i)
        threads_.emplace_back([this] { worker_loop(); });
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard lock(mutex_);
        stopping_ = true;
    }
    wake_.notify_all();
    threads_.clear();
}

void WorkerPool::run(std::size_t count, const std::function<void(std::size_t)>& task) {
    if (count == 0)
        return;
    if (threads_.empty()) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }

    std::lock_guard batch(batch_mutex_);
    {
        std::lock_guard lock(mutex_);
        task_ = &task;
        count_ = count;
        next_ = 0;
        active_ = threads_.size() + 1;
        ++generation_;
    }
    wake_.notify_all();
    drain();

    std::unique_lock lock(mutex_);
    done_.wait(lock, [this] { return active_ == 0; });
    task_ = nullptr;
}

void WorkerPool::drain() {
    for (;;) {
        std::size_t index;
        const std::function<void(std::size_t)>* task;
        {
            std::lock_guard lock(mutex_);
            if (next_ >= count_) {
                if (--active_ == 0)
                    done_.notify_all();
                return;
            }
            index = next_++;
            task = task_;
        }
        (*task)(index);
    }
}

void WorkerPool::worker_loop() {
    std::size_t seen = 0;
    for (;;) {
        {
            std::unique_lock lock(mutex_);
            wake_.wait(lock, [&] { return stopping_ || generation_ != seen; });
            if (stopping_)
                return;
            seen = generation_;
        }
        drain();
    }
}

} // namespace preisach
