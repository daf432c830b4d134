#include "swinglat/server.hpp"

#include <chrono>
#include <deque>
#include <fstream>
#include <sstream>

#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/steady_timer.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <spdlog/spdlog.h>

#include "swinglat/session.hpp"

namespace swinglat {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;
using Clock = std::chrono::steady_clock;

namespace {

const char* mime_type(const std::filesystem::path& p) {
    const auto ext = p.extension().string();
    if (ext == ".html") return "text/html";
    if (ext == ".js" || ext == ".mjs") return "application/javascript";
    if (ext == ".css") return "text/css";
    if (ext == ".json") return "application/json";
    if (ext == ".svg") return "image/svg+xml";
    if (ext == ".png") return "image/png";
    return "application/octet-stream";
}

// Maps a request target onto a file below root, refusing any escape.
std::optional<std::filesystem::path> resolve(const std::filesystem::path& root, std::string_view target) {
    std::string path(target.substr(0, target.find('?')));
    if (path.empty() || path[0] != '/' || path.find("..") != std::string::npos) return std::nullopt;
    if (path.back() == '/') path += "index.html";
    return root / path.substr(1);
}

class GameSocket : public std::enable_shared_from_this<GameSocket> {
public:
    GameSocket(tcp::socket socket, GameConfig config, long id)
        : ws_(std::move(socket)), timer_(ws_.get_executor()), session_(config), id_(id) {}

    void start(http::request<http::string_body> req) {
        ws_.async_accept(req, [self = shared_from_this()](beast::error_code ec) {
            if (ec) return spdlog::warn("session {}: handshake failed: {}", self->id_, ec.message());
            spdlog::info("session {} opened", self->id_);
            self->last_tick_ = Clock::now();
            self->send(self->session_.snapshot_message());
            self->arm();
            self->read();
        });
    }

private:
    void read() {
        ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
            if (ec) {
                self->closed_ = true;
                self->timer_.cancel();
                if (ec != websocket::error::closed) spdlog::debug("session {}: {}", self->id_, ec.message());
                spdlog::info("session {} closed", self->id_);
                return;
            }
            const std::string text = beast::buffers_to_string(self->buffer_.data());
            self->buffer_.consume(self->buffer_.size());
            self->catch_up();
            for (auto& reply : self->session_.handle_message(text)) self->send(reply);
            self->arm();
            self->read();
        });
    }

    // Feeds the wall time elapsed since the last tick into the engine.
    void catch_up() {
        const auto now = Clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_tick_).count();
        if (ms <= 0) return;
        last_tick_ += std::chrono::milliseconds(ms);
        for (auto& reply : session_.advance(ms)) send(reply);
    }

    void arm() {
        if (closed_) return;
        const auto wait = session_.ms_until_deadline();
        if (!wait) return;
        timer_.expires_at(last_tick_ + std::chrono::milliseconds(*wait));
        timer_.async_wait([self = shared_from_this()](beast::error_code ec) {
            if (ec || self->closed_) return;
            self->catch_up();
            self->arm();
        });
    }

    void send(const Json& message) {
        outbox_.push_back(message.dump());
        if (outbox_.size() == 1) write_next();
    }

    void write_next() {
        ws_.text(true);
        ws_.async_write(asio::buffer(outbox_.front()), [self = shared_from_this()](beast::error_code ec, std::size_t) {
            if (ec) {
                self->closed_ = true;
                self->timer_.cancel();
                return;
            }
            self->outbox_.pop_front();
            if (!self->outbox_.empty()) self->write_next();
        });
    }

    websocket::stream<beast::tcp_stream> ws_;
    asio::steady_timer timer_;
    beast::flat_buffer buffer_;
    std::deque<std::string> outbox_;
    Session session_;
    Clock::time_point last_tick_;
    long id_;
    bool closed_ = false;
};

} // namespace

struct Server::Impl : std::enable_shared_from_this<Server::Impl> {
    Impl(asio::io_context& ioc, ServerOptions opts) : acceptor(ioc), options(std::move(opts)) {}

    void accept() {
        acceptor.async_accept([self = shared_from_this()](beast::error_code ec, tcp::socket socket) {
            if (ec == asio::error::operation_aborted) return;
            if (!ec) self->serve_http(std::make_shared<beast::tcp_stream>(std::move(socket)));
            self->accept();
        });
    }

    void serve_http(std::shared_ptr<beast::tcp_stream> stream) {
        auto buffer = std::make_shared<beast::flat_buffer>();
        auto req = std::make_shared<http::request<http::string_body>>();
        http::async_read(*stream, *buffer, *req,
                         [self = shared_from_this(), stream, buffer, req](beast::error_code ec, std::size_t) {
                             if (ec) return;
                             if (websocket::is_upgrade(*req)) {
                                 ++self->opened;
                                 GameConfig config = self->options.config;
                                 config.rng_seed += static_cast<std::uint64_t>(self->opened - 1) * 1000003;
                                 std::make_shared<GameSocket>(stream->release_socket(), config, self->opened)
                                     ->start(std::move(*req));
                                 return;
                             }
                             self->respond(stream, *req);
                         });
    }

    void respond(std::shared_ptr<beast::tcp_stream> stream, const http::request<http::string_body>& req) {
        auto res = std::make_shared<http::response<http::string_body>>();
        res->version(req.version());
        res->keep_alive(false);
        const auto target = req.target();
        const auto file = resolve(options.web_root, std::string_view(target.data(), target.size()));
        std::ifstream in;
        if (file) in.open(*file, std::ios::binary);
        if (req.method() != http::verb::get && req.method() != http::verb::head) {
            res->result(http::status::method_not_allowed);
        } else if (!file || !in) {
            res->result(http::status::not_found);
            res->set(http::field::content_type, "text/plain");
            res->body() = "not found\n";
        } else {
            std::ostringstream body;
            body << in.rdbuf();
            res->result(http::status::ok);
            res->set(http::field::content_type, mime_type(*file));
            res->body() = body.str();
        }
        spdlog::debug("{} {} -> {}", std::string(req.method_string()), std::string(req.target()),
                      res->result_int());
        res->prepare_payload();
        http::async_write(*stream, *res, [stream, res](beast::error_code, std::size_t) {
            beast::error_code ignored;
            stream->socket().shutdown(tcp::socket::shutdown_send, ignored);
        });
    }

    tcp::acceptor acceptor;
    ServerOptions options;
    long opened = 0;
};

Server::Server(asio::io_context& ioc, ServerOptions options) {
    options.config.validate();
    impl_ = std::make_shared<Impl>(ioc, std::move(options));
    const tcp::endpoint endpoint(asio::ip::make_address(impl_->options.address), impl_->options.port);
    impl_->acceptor.open(endpoint.protocol());
    impl_->acceptor.set_option(asio::socket_base::reuse_address(true));
    impl_->acceptor.bind(endpoint);
    impl_->acceptor.listen();
    spdlog::info("listening on {}:{}, serving {}", impl_->options.address, port(), impl_->options.web_root.string());
    impl_->accept();
}

Server::~Server() {
    beast::error_code ignored;
    impl_->acceptor.close(ignored);
}

unsigned short Server::port() const { return impl_->acceptor.local_endpoint().port(); }

long Server::sessions_opened() const { return impl_->opened; }

} // namespace swinglat
