fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    if let Some(threads) = std::env::var("TOPOLENS_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            log::warn!("ignoring TOPOLENS_THREADS: {e}");
        }
    }
    std::process::exit(topolens::cli::run(std::env::args_os()));
}
