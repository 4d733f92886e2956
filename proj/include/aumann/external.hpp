// A set-valued functional implemented by another process.
//
// Protocol: one request per line on the child's stdin, a function literal
// `{x1: <set>, x2: <set>, ...}`; one reply per line on its stdout, a set
// literal (`empty`, `full`, `cone`, `{halfspaces: ...}` or `{points: ...}`).
// Requests are answered in order. POSIX only.
#pragma once

#include <csignal>
#include <cstdio>
#include <memory>
#include <mutex>
#include <string>

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include "aumann/axioms.hpp"
#include "aumann/text.hpp"
#include "aumann/workspace.hpp"

namespace aumann {

class ExternalProcess {
public:
    explicit ExternalProcess(std::string command) : command_(std::move(command))
    {
        int to_child[2], from_child[2];
        if (pipe(to_child) != 0 || pipe(from_child) != 0) throw Error("external: pipe() failed");
        pid_ = fork();
        if (pid_ < 0) throw Error("external: fork() failed");
        if (pid_ == 0) {
            dup2(to_child[0], STDIN_FILENO);
            dup2(from_child[1], STDOUT_FILENO);
            close(to_child[0]);
            close(to_child[1]);
            close(from_child[0]);
            close(from_child[1]);
            execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
            _exit(127);
        }
        close(to_child[0]);
        close(from_child[1]);
        in_ = fdopen(to_child[1], "w");
        out_ = fdopen(from_child[0], "r");
        if (!in_ || !out_) throw Error("external: fdopen() failed");
        std::signal(SIGPIPE, SIG_IGN);
    }

    ExternalProcess(const ExternalProcess&) = delete;
    ExternalProcess& operator=(const ExternalProcess&) = delete;

    ~ExternalProcess()
    {
        if (in_) std::fclose(in_);
        if (out_) std::fclose(out_);
        if (pid_ > 0) waitpid(pid_, nullptr, 0);
    }

    std::string request(const std::string& line)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (std::fputs((line + "\n").c_str(), in_) < 0 || std::fflush(in_) != 0) {
            throw Error("external '" + command_ + "': write failed (process exited?)");
        }
        std::string reply;
        int ch;
        while ((ch = std::fgetc(out_)) != EOF && ch != '\n') reply.push_back(static_cast<char>(ch));
        if (ch == EOF && reply.empty()) throw Error("external '" + command_ + "': no reply (process exited?)");
        ++requests_;
        return reply;
    }

    std::size_t requests() const { return requests_; }

private:
    std::string command_;
    pid_t pid_ = -1;
    FILE* in_ = nullptr;
    FILE* out_ = nullptr;
    std::mutex mutex_;
    std::size_t requests_ = 0;
};

/// Wraps an external command as a serial SetFunctional bound to `ws`.
inline SetFunctional external_functional(const std::string& command, const Workspace& ws)
{
    auto proc = std::make_shared<ExternalProcess>(command);
    const Cone c = ws.cone();
    const AtomicSpace sp = ws.space();
    SetFunctional phi{"external", command, {}, true};
    phi.evaluate = [proc, c, sp, command](const SimpleSetFunction& f) {
        const std::string reply = proc->request(format_function(f, sp));
        return parse_set(reply, c, "reply of '" + command + "'");
    };
    return phi;
}

}  // namespace aumann
