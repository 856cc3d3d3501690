namespace fibercone {}
