namespace ss {}
