//! One function per subcommand; each returns the bytes to emit.

mod containers;
mod extremal;
mod random;
mod structure;
mod supersat;

use crate::args::{Command, ContainersCommand, RandomCommand, SuperCommand};
use crate::{CliResult, Ctx};

pub fn dispatch(ctx: &Ctx, command: &Command) -> CliResult<String> {
    match command {
        Command::La(a) => extremal::la(ctx, a),
        Command::Count(a) => extremal::count(ctx, a),
        Command::Maxfree(a) => extremal::maxfree(ctx, a),
        Command::Embed(a) => structure::embed(ctx, a),
        Command::Blowup(a) => structure::blowup(ctx, a),
        Command::Super(s) => match s {
            SuperCommand::Find(a) => supersat::find(ctx, a),
            SuperCommand::Dense(a) => supersat::dense(ctx, a),
            SuperCommand::Classify(a) => supersat::classify(ctx, a),
            SuperCommand::CheckFork(a) => supersat::check_fork(ctx, a, false),
            SuperCommand::CheckForkPlus(a) => supersat::check_fork(ctx, a, true),
        },
        Command::Containers(c) => match c {
            ContainersCommand::Run(a) => containers::run(ctx, a),
            ContainersCommand::Replay(a) => containers::replay(ctx, a),
            ContainersCommand::Census(a) => containers::census(ctx, a),
        },
        Command::Random(r) => match r {
            RandomCommand::Experiment(a) => random::experiment(ctx, a),
            RandomCommand::Diamond(a) => random::diamond(ctx, a),
            RandomCommand::Pi(a) => random::pi(ctx, a),
            RandomCommand::Sample(a) => random::sample(ctx, a),
        },
    }
}
