// implemented later in this build
