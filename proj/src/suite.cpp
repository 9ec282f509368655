// assembled later
