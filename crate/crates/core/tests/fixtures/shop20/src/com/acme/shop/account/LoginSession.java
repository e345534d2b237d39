package com.acme.shop.account;

public class LoginSession {
    private Customer customer;
    private PasswordHasher passwordHasher;

    public LoginSession(Customer customer, PasswordHasher passwordHasher) {
        this.customer = customer;
        this.passwordHasher = passwordHasher;
    }

    public int sessionMinutes() {
        return 15;
    }

    public Customer customer() {
        return customer;
    }
}
