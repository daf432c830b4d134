#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include <boost/asio/io_context.hpp>

#include "swinglat/game.hpp"

namespace swinglat {

struct ServerOptions {
    std::string address = "127.0.0.1";
    unsigned short port = 8080;  // 0 picks a free port
    std::filesystem::path web_root = "web";
    GameConfig config;
};

// Serves the static UI over HTTP and one game Session per WebSocket
// connection on the same port. Everything runs on the caller's io_context;
// with a single-threaded context each session has exactly one writer.
class Server {
public:
    Server(boost::asio::io_context& ioc, ServerOptions options);
    ~Server();

    unsigned short port() const;
    long sessions_opened() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

} // namespace swinglat
